"""配置与输出工具"""
