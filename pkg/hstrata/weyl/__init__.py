"""B_n 型 Weyl 群（带符号置换）与 Bruhat 序"""
