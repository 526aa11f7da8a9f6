"""
Published data for the Speh orbit of sl(4,R): the orbit of Y1 + Y2,
partition 2^2, whose ring of regular functions carries the K-types of
the Speh representation.
"""

FIXTURE = "speh_sl4R"

# (degree, weight) of the two generators of the invariant ring
GENERATORS = [(1, (2, 0)), (2, (2, 2))]

HEIGHT = 2

# lowest K-type of the Speh representation
LOWEST_KTYPE = (1, 1)

# cone {(u, v) : u >= v >= 0}
CONE_INEQUALITIES = [[1, -1], [0, 1]]
