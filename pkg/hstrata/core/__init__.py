"""核心数据模型和异常"""
