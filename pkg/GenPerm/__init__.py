"""
GenPerm - Permutoedros generalizados y funciones supermodulares

Biblioteca en aritmética racional exacta y CLI (`genperm`) para:

- core: subconjuntos, funciones de conjunto, chequeos de (super)modularidad
- transform: mapa T, sumas de camino, reconstrucción
- cone: método de doble descripción y funciones irreducibles
- balanced: multiconjuntos y vectores balanceados
- monotone: funciones no decrecientes y anticadenas
- matroid: matroides y su biyección con funciones simples
- twolayer: la familia de dos capas
"""
