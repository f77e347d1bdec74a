"""A first tour: build the Haar bank as a lifting cascade and take it apart.

Run:  python3 demos/01_haar_walkthrough.py
"""

from liftbank import analyze_signal, synthesize_signal
from liftbank.banks import haar

cascade = haar()

print("The Haar analysis bank as two lifting steps, K = 1:")
for i, step in enumerate(cascade.steps):
    channel = "lowpass" if step.update == 0 else "highpass"
    print(f"  step {i}: updates the {channel} channel with filter {step.filter}")

matrix = cascade.evaluate()
print("\nMultiplied out, the polyphase matrix is")
print(f"  [[{matrix.h00}, {matrix.h01}],")
print(f"   [{matrix.h10}, {matrix.h11}]]")
print(f"  det = {matrix.determinant()}   (det 1 <=> perfect reconstruction)")

pair = matrix.to_filters()
print("\nThe scalar analysis filters hidden inside:")
print(f"  H0(z) = {pair.lowpass}")
print(f"  H1(z) = {pair.highpass}")
print(f"  H0(1) = {pair.lowpass.evaluate(1)}   (DC gain)")
print(f"  H1(1) = {pair.highpass.evaluate(1)}  (highpass kills DC)")

inverse = cascade.synthesis()
print("\nThe synthesis cascade just runs the steps backwards, negated:")
for i, step in enumerate(inverse.steps):
    print(f"  step {i}: update={step.update}, filter {step.filter}")

signal = [4, 6, 5, 9]
bands = analyze_signal(cascade, signal)
print(f"\nTransforming {signal}:")
print(f"  lowpass  = {[str(v) for v in bands.lowpass]}   (pairwise averages)")
print(f"  highpass = {[str(v) for v in bands.highpass]}   (pairwise differences)")
print(f"  synthesize(analyze(x)) = {[str(v) for v in synthesize_signal(cascade, bands)]}")
