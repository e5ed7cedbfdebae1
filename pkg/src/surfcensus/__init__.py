"""surfcensus: combinatorial surface and graph-cover censuses.

Library layout:

- polyhedra:    compact right-angled polyhedra, face disks, doubling
- coxeter:      the reflection group of a polyhedron: normal forms,
                chambers, walls, combinatorial distance
- surfaces:     the pentagon-chain disk, cut-and-paste gluings,
                half-space invariants, Euler/genus bookkeeping, census
- graphcovers:  pointed covers of the bouquet of two circles and the
                label-blind invariants that recover the gluing
- metricgraphs: metric graphs, rigidity thresholds, a desk-scale
                quasi-isometry search
- involutions:  order-two permutations shared by both censuses
- cli:          the `surfcensus` command line front end
"""

__version__ = "0.1.0"
