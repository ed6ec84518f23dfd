"""Exact computer algebra for Jack Littlewood-Richardson coefficients.

Subpackages:

* ``exact``      -- rational arithmetic, sparse polynomials, rational functions
* ``partitions`` -- partitions, boxes, alpha-hooks, pivot pairs
* ``symfunc``    -- Jack polynomials in the monomial basis, products,
                    Littlewood-Richardson expansion
* ``stanley``    -- diagram calculus on the ten free boxes of the root triple
* ``hookspace``  -- the five-dimensional hook coordinate space, claw-type
                    linear relations, symmetrizations
* ``petjohn``    -- Petersen/Johnson graph combinatorics behind the symmetry
                    group actions
* ``pivots``     -- pivot-congruence scans over adjacent coefficient pairs
* ``cli``        -- the ``jacklr`` command-line verifier
"""

__version__ = "0.1.0"
