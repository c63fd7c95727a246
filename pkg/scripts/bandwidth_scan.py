"""Scan recurrence bandwidths: product-form operators against generic ones.

For each order N the product-form operator yields a stable (N+1)-term
recurrence (band N-1), while a random operator of the same order produces a
dense coefficient table with no band at all.  Everything is exact, so a
reported zero is a real zero.
"""
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from bochner import (
    BochnerOperator,
    GaussianRational,
    Poly,
    ShapiroOperator,
    bandwidth,
    deltas_from_operator,
    eigensystem,
    fit_recurrence,
    to_bochner,
)


@dataclass
class ScanConfig:
    orders: tuple = (1, 2, 3, 4, 5)
    n_max: int = 20
    n_start: int = 10
    seed: int = 7


def random_operator(rng, order):
    while True:
        polys = [Poly()]
        for i in range(1, order + 1):
            coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(i + 1)]
            polys.append(Poly(coeffs))
        if not polys[order]:
            continue
        op = BochnerOperator(polys)
        try:
            table = deltas_from_operator(op, 4)
            _ = eigensystem(table)
        except Exception:
            continue
        return op


def fitted_band(op, config):
    table = deltas_from_operator(op, config.n_max + 1)
    system = eigensystem(table)
    coeffs = fit_recurrence(system)
    return bandwidth(coeffs, config.n_start)


def main():
    config = ScanConfig()
    rng = Random(config.seed)
    print(f"rows fitted: 0..{config.n_max}, detection window starts at {config.n_start}")
    print(f"{'order':>5}  {'product-form band':>18}  {'generic band':>12}")
    for order in config.orders:
        c = [GaussianRational(Fraction(rng.randint(1, 4), rng.randint(1, 3))) for _ in range(order)]
        product = fitted_band(to_bochner(ShapiroOperator(c)), config)
        generic = None
        for _ in range(10):
            try:
                generic = fitted_band(random_operator(rng, order), config)
                break
            except Exception:
                continue
        print(f"{order:>5}  {str(product):>18}  {str(generic):>12}")
    print("\nA band of N-1 means an (N+1)-term recurrence; None means the table is dense.")


if __name__ == "__main__":
    main()
