"""Cauchon 图：约化字、判定、枚举与网格表示"""
