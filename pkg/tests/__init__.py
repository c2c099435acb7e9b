"""
GenPerm Test Suite

Tests unitarios y de propiedades (pytest + hypothesis) para GenPerm.
"""
