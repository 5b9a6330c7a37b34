"""管道梦、轮换分类与核维数"""
