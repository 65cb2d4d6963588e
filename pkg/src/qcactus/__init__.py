"""Exact symbolic computation for cactus-group involutions on quantum rank-2
modules: Laurent/rational arithmetic over Q(v), finite Coxeter combinatorics,
the explicit six-entry crystal, symbolic simple modules with three independent
involution constructions, and the Gelfand-Kirillov model algebra."""

__version__ = "0.1.0"
