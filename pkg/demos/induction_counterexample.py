"""Induce from a pseudo-Levi subgroup of B3 and look at supports and cells.

The smallest input where the induced cell escapes the cell bound lives in
B3 <= C1xC2.  Run with ``python3 demos/induction_counterexample.py``.
"""

from springerlab.induction import SubgroupSpec, induce
from springerlab.partitions import GroupType
from springerlab.springer import cell_leq, cell_of, springer_class
from springerlab.wellsupport import check_well_supported, induced_cell_data, verify_prop_ind_supp

sub = SubgroupSpec.parse("B3 <= C1xC2")
reps = [([], [1]), ([], [2])]
v = induce(sub, reps)
print(f"Ind from {sub} of ([],[1]) x ([],[2]):")
for e, m in v.items():
    print(f"  {m} x ({list(e.alpha)},{list(e.beta)})  on class {list(springer_class(e).lam)}")

top, o = induced_cell_data(sub, reps)
print(f"\ncell bound from the factors: ({list(top.alpha)},{list(top.beta)}), class {list(o.lam)}")
for e in v:
    print(f"  ({list(e.alpha)},{list(e.beta)}) below the bound: {cell_leq(cell_of(e), cell_of(top))}")

print(f"\nwell supported: {check_well_supported(v).well_supported}")
report = verify_prop_ind_supp(GroupType("B", 3), raise_on_failure=False)
print(f"sweep over B3: {report.checked} inputs, {len(report.counterexamples)} counterexample(s)")
