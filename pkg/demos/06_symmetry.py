"""Linear phase and group lifting structure.

Run:  python3 demos/06_symmetry.py
"""

from liftbank import analyze
from liftbank.banks import five_three, identity_six_step, wa_lifted_haar

for name, cascade in (
    ("5/3", five_three()),
    ("WA steps over the Haar base", wa_lifted_haar()),
    ("6-step identity lifting", identity_six_step()),
):
    report = analyze(cascade)
    print(f"{name}:")
    print(f"  lowpass  {report.filters.lowpass}")
    print(f"    symmetry: {report.lowpass_symmetry.kind} "
          f"about {report.lowpass_symmetry.center}")
    print(f"  highpass {report.filters.highpass}")
    print(f"    symmetry: {report.highpass_symmetry.kind} "
          f"about {report.highpass_symmetry.center}")
    print(f"  linear-phase class: {report.linear_phase}")
    print(f"  group lifting:      {report.group_lifting}")
    print()

# The interesting contrast: the identity bank itself is trivially
# symmetric, but its 6-step factorization wanders outside both
# symmetry-preserving step groups - group structure is a property of the
# factorization, not of the bank it multiplies out to.
