"""Codes deleting projective lines, and one-step puncturing of Griesmer codes."""

import numpy as np

from sscodes import SSParams, affine_ss, classify, field_of_order, griesmer_sum, lines_code, puncture
from sscodes.analysis import find_avoiding_functional
from sscodes.weights import min_distance

F = field_of_order(2)
eye = np.eye(6, dtype=np.int64)
L = lines_code(F, 6, [eye[i] for i in range(4)], e=1)
d = min_distance(L)
print(f"four unit lines in F_2^6: [{L.n},6,{d}], g(6,{d + 2}) = {griesmer_sum(2, 6, d + 2)} > {L.n}")
print("avoiding functional:", find_avoiding_functional(F, 6, [eye[i] for i in range(4)]))

C = affine_ss(SSParams(F, 4, (2,)))
for step in range(3):
    dc = min_distance(C)
    print(f"{C.provenance[-1]:>12}: {classify(2, C.n, C.k, dc).summary()}")
    C = puncture(C)
