"""Build an affine Solomon-Stiffler code, weigh it, and classify it."""

from sscodes import SSParams, affine_ss, classify, field_of_order, weight_distribution

F = field_of_order(3)
params = SSParams(F, k=4, u=(2, 2))
code = affine_ss(params)
wd = weight_distribution(code, "hyperplane")

print(f"{params.describe()} -> [{code.n},{code.k}]_{code.q}")
print("nonzero weights:", {w: c for w, c in wd.counts.items() if w})
print(classify(code.q, code.n, code.k, wd.min_distance).summary())
