"""Check monotonicity over parameter grids and across wavelets."""

from pqseverity import default_sweep, run_sweep, simultaneous_scenario, wavelet_sensitivity
from pqseverity.events import EventSpec

for kind in ("sag", "swell", "interruption", "transient"):
    res = run_sweep(default_sweep(kind))
    index = "wni" if kind == "transient" else "eni"
    lo, hi = res.index_range(index)
    print(f"{kind:12s} {len(res):4d} points, {index} {lo:6.2f}..{hi:6.2f}, monotone: {res.is_monotone(index)}")

sens = wavelet_sensitivity(default_sweep("transient"), ["db1", "db4", "sym4", "coif3", "db20"])
for row in sens.summary():
    print(f"  transient with {row['wavelet']:5s}: ENI {row['eni_min']:.2f}..{row['eni_max']:.2f}")

pair = simultaneous_scenario(
    EventSpec.make("sag_transient", alpha=0.5, td=10, beta=1, gamma=-55, f_tr=2000, snr_db=45, seed=1),
    EventSpec.make("sag_transient", alpha=0.3, td=10, beta=4, gamma=-55, f_tr=2000, snr_db=45, seed=2),
)
print("deeper sag vs larger transient, more severe by index:", pair.verdicts)
