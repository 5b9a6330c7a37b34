"""不变量校验套件"""
