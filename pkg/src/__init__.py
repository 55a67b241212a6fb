"""theta-gallai source package.

This package contains modules for:
- algebra: exact integer polynomials, Sturm sequences, real algebraic numbers
- graphs: bitmask graphs, graph6, matching polynomials and root multiplicities
- theory: the theta-Gallai-Edmonds decomposition, D-graph operators, Tutte sets
- verification: corpus generation, the property registry and the harness
- cli: the ``theta-gallai`` command line
- config: engine caps and the settings file
"""
