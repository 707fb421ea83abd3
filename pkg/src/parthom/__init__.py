"""parthom: partition-homogeneity and partition-transitivity of finite
permutation groups, plus the transformation-semigroup pair checks built on
them."""

__version__ = "0.1.0"
