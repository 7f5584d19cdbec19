"""Score sags of growing depth, then a transient with a band preference."""

from pqseverity import EventSpec, compute_indices, high_band_profile, synthesize

for alpha in (0.1, 0.3, 0.5, 0.7, 0.9):
    rep = compute_indices(synthesize(EventSpec.make("sag", alpha=alpha, td=30)))
    print(f"sag alpha={alpha:.1f}, 30 cycles: ENI {rep.eni:6.2f}%")

rec = synthesize(EventSpec.make("sag_transient", alpha=0.3, td=10, beta=4, gamma=-55, f_tr=2000))
rep = compute_indices(rec, preference=high_band_profile(7), segmented=True)
print(f"sag with transient: ENI {rep.eni:.2f}%  WNI {rep.wni:.2f}%  LNI {rep.lni:.2f}%")
