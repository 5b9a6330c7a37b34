"""前缀划分的并行 Cauchon 图枚举"""
