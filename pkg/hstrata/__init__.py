"""
HStrata - B_n 型量子极小 Grassmann 大胞腔的环面不变层枚举与验证工具

枚举 Cauchon 图，用管道梦与精确核两种方法计算层维数，
并用精确截断级数复现生成函数 H(x,t) = (e^x/(2-e^x))^((t+1)/2)。
"""

__version__ = "0.1.0"
__author__ = "HStrata Team"
