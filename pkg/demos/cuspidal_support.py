"""Cuspidal data of B5 and the unipotent support of the induced character sheaf.

Run with ``python3 demos/cuspidal_support.py``.
"""

from springerlab.gensupport import CuspidalDatum, enumerate_data, gamma_of_rep, o_sc_of_datum, trivial_rep, unipotent_support_A
from springerlab.induction import identity_spec
from springerlab.partitions import GroupType
from springerlab.usymbols import format_usymbol

for d in enumerate_data(GroupType("B", 5)):
    rel = d.relative
    g = gamma_of_rep(d, trivial_rep(rel))
    sub = identity_spec(rel)
    e1 = [trivial_rep(rel).rows]
    print(f"{d}: relative group {rel}, defect {d.defect}")
    print(f"  gamma(trivial) = {format_usymbol(g.usymbol)} on class {list(g.cls.lam)}")
    print(f"  O_A = {list(unipotent_support_A(d, sub, e1).lam)}, O_sc = {list(o_sc_of_datum(d, sub, e1).lam)}")

d = CuspidalDatum(GroupType("B", 2))
sub = identity_spec(d.relative)
print("\nIn B2 the non-special ([],[2]) has support strictly below O_sc:")
print(f"  O_A = {list(unipotent_support_A(d, sub, [([], [2])]).lam)}, O_sc = {list(o_sc_of_datum(d, sub, [([], [2])]).lam)}")
