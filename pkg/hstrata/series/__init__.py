"""截断 EGF 算术与计数级数"""
