"""Permutope -- exact permutation-polytope toolkit with certified face-subgroup tests."""
