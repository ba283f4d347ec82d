"""
Zero fill-in pivots of a sparse matrix
======================================

Pick pivots that Gaussian elimination can use without turning any
structural zero into a nonzero.
"""

import numpy as np
import scipy.sparse as sp

from disimplicial import maximal_elimination
from disimplicial.io import SparseMatrixGraph

rng = np.random.default_rng(4)
n = 12
a = sp.random(n, n, density=0.12, random_state=rng, format="coo")
a = (a + sp.eye(n)).tocoo()
print("nonzeros:", a.nnz)

# rows become sources, columns sinks, one arc per stored entry
smg = SparseMatrixGraph.from_pattern(n, n, zip(a.row.tolist(), a.col.tolist()))
scheme = maximal_elimination(smg.graph)
pivots = [smg.entry(arc) for arc in scheme.steps]
print("pivots (row, col):", pivots)
print("whole matrix eliminated:", scheme.perfect)

# replay the pivots on a dense 0/1 pattern and count new nonzeros
pattern = a.toarray() != 0
alive_r = np.ones(n, bool)
alive_c = np.ones(n, bool)
fill = 0
for i, j in pivots:
    rows = np.flatnonzero(pattern[:, j] & alive_r)
    cols = np.flatnonzero(pattern[i] & alive_c)
    block = pattern[np.ix_(rows, cols)]
    fill += int((~block).sum())
    pattern[np.ix_(rows, cols)] = True
    alive_r[i] = alive_c[j] = False
print("fill-in created:", fill)
