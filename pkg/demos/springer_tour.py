"""Walk through the Springer correspondence for B5.

Run with ``python3 demos/springer_tour.py``.
"""

from springerlab.partitions import GroupType, enumerate_classes
from springerlab.springer import Bipartition, cell_of, springer_class, springer_rep
from springerlab.usymbols import format_usymbol, usymbol_of_class

b5 = GroupType("B", 5)

e = Bipartition([3], [2], b5)
cls = springer_class(e)
print(f"{b5}: the representation ([3],[2]) lands on the class {list(cls.lam)}")
print(f"  its u-symbol is {format_usymbol(usymbol_of_class(cls))}")
print(f"  the special class of its cell is {list(cell_of(e).special_class.lam)}")

print(f"\nAll {len(enumerate_classes(b5))} unipotent classes of {b5} and their (class, 1) representations:")
for c in enumerate_classes(b5):
    rep = springer_rep(c)
    print(f"  {str(list(c.lam)):>36}  ->  ({list(rep.alpha)},{list(rep.beta)})")
