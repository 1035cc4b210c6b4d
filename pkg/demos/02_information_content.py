"""
Information-content measures
============================

Resnik, Lin and Jiang-Conrath need corpus counts.  Counts propagate up the
hierarchy, and a concept's information content is ``-ln`` of its share of the
total.
"""

from pathlib import Path

import taxsim

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
tax = taxsim.load_taxonomy(FIXTURES / "tiny_ic.tax")
ic = taxsim.build_ic(taxsim.load_frequencies(FIXTURES / "tiny_ic.freq", tax), tax)

for c, label in enumerate(tax.labels):
    print(f"{label:>6}  cum={ic.cum_count[c]:>3}  IC={ic.ic(c):.4f}")

###############################################################################
# The three measures on a sibling pair, a cross-branch pair and a self pair.

for a, b in [("A1", "A2"), ("A1", "B"), ("A1", "A1")]:
    row = [taxsim.similarity(tax, a, b, kind, ic=ic).value for kind in ("resnik", "lin", "jcn")]
    print(f"{a}/{b}: resnik={row[0]:.4f} lin={row[1]:.4f} jcn={row[2]:.4g}")
