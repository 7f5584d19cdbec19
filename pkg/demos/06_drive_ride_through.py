"""Relate the index to drive ride-through over a magnitude/duration grid."""

from pqseverity import asd_contour_study, asd_ride_through

study = asd_contour_study()
print(f"{len(study.rows)} grid points")
print(f"smallest ENI of a stopped drive: {study.threshold_lo:.2f}%")
print(f"largest ENI of a running drive:  {study.threshold_hi:.2f}%")
print("every event at or below 1.3% keeps running:", study.low_implies_running(1.3))
for alpha, td in [(0.3, 20), (0.6, 3), (0.6, 10)]:
    print(f"alpha={alpha}, {td} cycles -> {asd_ride_through(alpha, td).value}, ENI {study.eni_at(alpha, td):.2f}%")
