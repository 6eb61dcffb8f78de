#!/usr/bin/env python3
"""Measure how the factored lowest-level closed form drifts from the exact one.

The exact reduction keeps exp(sqrt(1 + M^2/B) * sqrt(1 + x^2/B)) inside the
integral; the factored variant replaces it by exp(-sqrt(1 + M^2/B)) outside
times exp(sqrt(1 + x^2/B)) inside.  The two are not equal: their ratio tends
to exp(-1) as the field grows.  This script tabulates the measured ratio so
the offset is on record next to the scan data.
"""

import argparse
import math

from magdecay import DecayChannel, lll_ratio_exact, lll_ratio_factored


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--M-mu", dest="m_mu", type=float, default=105.7)
    args = parser.parse_args()

    channel = DecayChannel(m_parent=args.m_mu)
    m_sq = args.m_mu**2
    print("field_over_Msq,ratio_exact,ratio_factored,factored_over_exact")
    for factor in (0.6, 1.0, 3.0, 10.0, 1e2, 1e3, 1e4, 1e6, 1e8):
        field = factor * m_sq
        exact = lll_ratio_exact(channel, field)
        factored = lll_ratio_factored(channel, field)
        print(f"{factor:g},{exact:.12g},{factored:.12g},{factored / exact:.12g}")
    print(f"# exp(-1) = {math.exp(-1):.12g}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
