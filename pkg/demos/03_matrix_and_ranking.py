"""
Similarity matrices and nearest concepts
========================================

``similarity_matrix`` returns labels in byte order with a numpy array.
``top_k`` ranks the concepts nearest to an anchor.
"""

from pathlib import Path

import numpy as np

import taxsim
from taxsim.batch import matrix_csv

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
tax = taxsim.load_taxonomy(FIXTURES / "univ.tax")

labels, wp = taxsim.similarity_matrix(tax, "wp")
_, new = taxsim.similarity_matrix(tax, "new", workers=2)
print(f"{len(labels)} concepts, matrices symmetric: {np.array_equal(wp, wp.T) and np.array_equal(new, new.T)}")

###############################################################################
# The penalty only ever lowers a score, and only for cross-branch pairs.

drop = wp - new
i, j = np.unravel_index(np.argmax(drop), drop.shape)
print(f"largest drop: {labels[i]}/{labels[j]} {wp[i, j]:.4f} -> {new[i, j]:.4f}")
print(f"pairs unchanged: {int((drop == 0).sum())} of {drop.size}")

###############################################################################
# Nearest neighbours of Student under both measures.

for kind in ("wp", "new"):
    ranked = taxsim.top_k(tax, "Student", 4, kind)
    print(kind, ", ".join(f"{label} {v:.3f}" for label, v in ranked))

###############################################################################
# A small block of the matrix in the CLI's CSV layout.

sub_labels, sub = taxsim.similarity_matrix(tax, "new", concepts=["Person", "PostDoc", "AdministrativeStaff"])
print(matrix_csv(sub_labels, sub), end="")
