"""
Admissible orderings and flip posets
====================================

Total orderings whose restriction to every packet is the packet order or its
reverse, the packet flips connecting them, and the graded posets those flips
generate on commutation classes.
"""

from bruhatb import (
    build_poset,
    check_extrema,
    enumerate_admissible,
    flip_candidates,
    format_element,
    inversion_set,
    maximal_chains,
    packet_flip,
    poset_to_dot,
    rho_min,
)

# Start from the standard (minimal) ordering of C_B(J_2, 1) = J_2.
base = rho_min("B", 2, 1)
print("minimal ordering:", base)
print("inversions:", [format_element(K) for K in inversion_set(base)])

# A flip is available when every comparable component of some packet
# occupies consecutive positions; flipping reverses those blocks.
for K in sorted(flip_candidates(base), key=str):
    print(f"flip at {format_element(K)}:", packet_flip(base, K))

# Closing the flips from the bottom yields a graded poset whose rank
# function is the inversion-set size.  At level 1 type B this is the weak
# order on signed permutations, 2^n n! classes in all.
p = build_poset("B", 2, 1)
print("nodes:", len(p.nodes), "edges:", len(p.edges), check_extrema(p))

# Its maximal chains, read as edge-label sequences, are exactly the
# admissible orderings one level up: here the standard order of C_B(J_2,2)
# and its reverse.
for labels in maximal_chains(p):
    print("chain:", " < ".join(format_element(K) for K in labels))
print("admissible level-2 orderings:", len(enumerate_admissible("B", 2, 2)))

# The same machinery runs in type A and at level 2 in type B.
print("|B(I_4,2)| =", len(build_poset("A", 4, 2).nodes))
print("|B_B(J_3,2)| =", len(build_poset("B", 3, 2).nodes))

# Posets export to DOT for rendering with graphviz.
print(poset_to_dot(build_poset("B", 2, 2)))
