"""
Wu-Palmer and its direction-penalised variant
=============================================

Loads the university hierarchy that ships in ``fixtures/`` and compares the
plain Wu-Palmer score with the penalised variant, which multiplies it by
``exp(-L / D)``.  L counts the edges of the cheapest walk between the two
concepts, plus one for every change between climbing and descending.  It is
zero when one concept subsumes the other.
"""

from pathlib import Path

import taxsim

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
tax = taxsim.load_taxonomy(FIXTURES / "univ.tax")
print(tax)

###############################################################################
# Depths are edge counts from the root, so Person sits at 1 and PostDoc at 4.

for label in ("Thing", "Person", "Employee", "Faculty", "PostDoc"):
    print(f"{label:>10}  depth {taxsim.depth_of(tax, label)}")

###############################################################################
# Wu-Palmer ranks PostDoc closer to AdministrativeStaff, a concept in another
# branch, than to its own ancestor Person.

for a, b in [("Person", "PostDoc"), ("PostDoc", "AdministrativeStaff")]:
    info = taxsim.path_info(tax, a, b)
    print(f"{a}/{b}: lcs={tax.label(info.lcs)} N={info.n} N1={info.n1} N2={info.n2} "
          f"L={info.raw_l} (effective {info.effective_l})")
    print(f"    wp  = {taxsim.sim_wp(info):.4f}")
    print(f"    new = {taxsim.sim_new(info, tax.max_depth):.4f}")

###############################################################################
# The penalty reverses that ranking.  Sweeping D shows how strongly it bites:
# a shallow taxonomy punishes cross-branch pairs hardest.

info = taxsim.path_info(tax, "ResearchAssistant", "Faculty")
for d in (3, 5, 8, 12, 20):
    print(f"D={d:>2}  ResearchAssistant/Faculty new = {taxsim.sim_new(info, d):.4f}")
