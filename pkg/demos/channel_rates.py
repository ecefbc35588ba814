"""
Logical error rates on two channels
===================================

Exhaustive small-error checks, then Monte Carlo sweeps with Wilson
intervals. Fixed seeds make every number here reproducible.
"""

from qbch.channel import DEPOLARIZING, ERASURE, ChannelModel, QuantumDecoder, estimate_logical_error_rate
from qbch.channel import exhaustive_check
from qbch.cyclotomic import ZeroSet
from qbch.quantum import build_qbch

codes = {
    "steane": build_qbch(ZeroSet.from_cosets(7, 2, [0, 3])),
    "gf4-13": build_qbch(ZeroSet.from_cosets(13, 4, [0, 1])),
}

for name, record in codes.items():
    dec = QuantumDecoder(record)
    for channel in (DEPOLARIZING, ERASURE):
        r = exhaustive_check(dec, channel)
        print(f"{record.label:<12} {channel:<13} exhaustive: {r.failures}/{r.trials} failures")

dec = QuantumDecoder(codes["steane"])
for channel in (DEPOLARIZING, ERASURE):
    for eps in (0.01, 0.05, 0.1, 0.2):
        r = estimate_logical_error_rate(dec, ChannelModel(channel, eps), 20000, seed=1)
        lo, hi = r.ci95
        print(f"{channel:<13} eps={eps:<5} rate={r.rate:.4f}  ci95=({lo:.4f}, {hi:.4f})")
