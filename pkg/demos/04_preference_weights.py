"""Turn band rankings and an intensity into weights."""

from pqseverity import preference_weights

print("ranking 1,2,3 at intensity 9:", preference_weights([1, 2, 3], 9).weights.round(4))
print("ranking 2,1,3 at intensity 9:", preference_weights([2, 1, 3], 9).weights.round(4))
for intensity in (1, 3, 9):
    w = preference_weights(list(range(1, 9)), intensity).weights
    print(f"eight bands, intensity {intensity}: first/last ratio {w[0] / w[-1]:.2f}")
