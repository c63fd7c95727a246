"""Round-trip demonstration: operator -> eigen-data -> operator.

Generates a random operator, computes its eigen-family exactly, forgets the
operator, and reconstructs it from the family alone.  Also shows the
negative side: nudging a single polynomial coefficient makes every tested
order fail the finite-order criterion.
"""
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from bochner import (
    BochnerOperator,
    EigenData,
    NoFiniteOrderOperator,
    Poly,
    deltas_from_operator,
    eigensystem,
    reconstruct,
)


@dataclass
class RoundTripConfig:
    order: int = 3
    degree: int = 12
    seed: int = 2024


def random_operator(rng, order, degree):
    while True:
        polys = [Poly()]
        for i in range(1, order + 1):
            coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(i + 1)]
            polys.append(Poly(coeffs))
        if not polys[order]:
            continue
        op = BochnerOperator(polys)
        try:
            eigensystem(deltas_from_operator(op, degree))
        except Exception:
            continue
        return op


def main():
    config = RoundTripConfig()
    rng = Random(config.seed)
    op = random_operator(rng, config.order, config.degree)
    print(f"original operator:      {op}")

    system = eigensystem(deltas_from_operator(op, config.degree))
    data = EigenData(system.lambdas, system.polys)
    rebuilt = reconstruct(data, config.order)
    print(f"reconstructed operator: {rebuilt}")
    print(f"exact match: {rebuilt == op}")

    perturbed_polys = list(system.polys)
    mid = config.degree // 2
    perturbed_polys[mid] = perturbed_polys[mid] + Poly([1])
    perturbed = EigenData(system.lambdas, perturbed_polys)
    print(f"\nafter bumping one coefficient of P_{mid} by 1:")
    for order in range(1, config.order + 3):
        try:
            reconstruct(perturbed, order)
            print(f"  order {order}: unexpectedly reconstructed")
        except NoFiniteOrderOperator as exc:
            print(f"  order {order}: no operator (first failure at {exc.failure})")


if __name__ == "__main__":
    main()
