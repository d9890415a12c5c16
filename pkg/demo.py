#!/usr/bin/env python3
"""
ballmorph Demo Script

This script walks through the core functionality of ballmorph: measures
of a small union of balls, their gradients, the morphometric energy, a
degenerate event and the oracle checks.
"""

import os
import sys
import logging

import numpy as np

# Add the project root to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

try:
    from src import (
        BallSet,
        MorphometricCoefficients,
        build_alpha_complex,
        compute_measures,
        energy_gradient,
        mean_curvature_gradient,
        morphometric_energy,
    )
    from src.degeneracy import locate_event, probe_order
    from src.oracles import CheckContext, CheckFactory
except ImportError as e:
    print(f"Import error: {e}")
    print("Please ensure all dependencies are installed: pip install -r requirements.txt")
    sys.exit(1)

# Configure logging
logging.basicConfig(level=logging.WARNING, format='%(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def banner(title):
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def demo_measures():
    """Measures of a short chain of overlapping balls."""
    banner("WEIGHTED INTRINSIC VOLUMES")

    balls = BallSet.from_arrays([[0, 0, 0], [1.5, 0, 0], [3.0, 0, 0]], [1.0, 1.2, 0.9])
    complex_ = build_alpha_complex(balls)
    measures = compute_measures(complex_)

    print(f"\nBalls: {balls.n}, alpha complex counts: {complex_.counts()}")
    for name, value in measures.as_dict().items():
        print(f"  {name:<7}: {value:12.6f}")
    print(f"  Euler characteristic: {complex_.euler_characteristic()}")
    return balls


def demo_gradients(balls):
    """Per-ball mean-curvature gradient and its three parts."""
    banner("MEAN CURVATURE GRADIENT")

    field = mean_curvature_gradient(build_alpha_complex(balls))
    frame = field.to_frame()
    print(frame[["gx", "gy", "gz"]].round(6).to_string())
    print(f"\nNorm: {field.norm():.6f}")
    print(f"Net force (should vanish): {np.abs(field.g.reshape(-1, 3).sum(axis=0)).max():.2e}")


def demo_energy(balls):
    """A solvation-style energy and its gradient."""
    banner("MORPHOMETRIC ENERGY")

    mu = MorphometricCoefficients(0.1, 0.05, -0.02, 0.0)
    complex_ = build_alpha_complex(balls.inflated(0.3))
    energy = morphometric_energy(compute_measures(complex_), mu)
    field = energy_gradient(complex_, mu=mu)
    print(f"Coefficients: {mu.as_tuple()}")
    print(f"Energy with probe 0.3: {energy:.6f}")
    print(f"Largest force component: {np.abs(field.g).max():.6f}")


def demo_degenerate_event():
    """Two balls pulled into contact: locate, classify and probe the event."""
    banner("DEGENERATE EVENT")

    start = BallSet.from_arrays([[0, 0, 0], [2.01, 0, 0]], 1.0)
    end = BallSet.from_arrays([[0, 0, 0], [1.99, 0, 0]], 1.0)
    event = locate_event(start, end)
    report = event.report
    print(f"Event {report.case_label} between balls {report.involved}")
    print(f"Bracket: [{event.lower:.10f}, {event.upper:.10f}]")
    print(f"Predicted order: {report.predicted_mean_order.value}, "
          f"gradient jump: {report.predicted_gradient_jump.value}")

    def trajectory(eps):
        return BallSet.from_arrays([[0, 0, 0], [2.0 - eps, 0, 0]], 1.0)

    probe = probe_order(trajectory(0.0), trajectory, report)
    print(f"Measured exponent: {probe.mean_exponent:.3f}")
    print(f"Matches prediction: {probe.matches_prediction}")


def demo_checks(balls):
    """Run every oracle check on the chain."""
    banner("ORACLE CHECKS")

    results = CheckFactory().run_all(build_alpha_complex(balls), CheckContext(samples=20_000, seed=1))
    for result in results:
        status = "skipped" if result.skipped else ("passed" if result.passed else "FAILED")
        print(f"  {result.name:<18} {status}")


def main():
    """Run all demonstrations."""
    print("Starting ballmorph demonstration...")

    try:
        balls = demo_measures()
        demo_gradients(balls)
        demo_energy(balls)
        demo_degenerate_event()
        demo_checks(balls)

        banner("DEMO COMPLETED SUCCESSFULLY!")
        print("\nNext steps:")
        print("   1. Measure your own ball file: python app.py measures balls.txt")
        print("   2. Check it against the oracles: python app.py check balls.txt")
        print("   3. Run the test suite: pytest tests")

    except KeyboardInterrupt:
        print("\n\nDemo interrupted by user.")
    except Exception as e:
        print(f"\nDemo failed with error: {e}")
        logger.exception("Demo error")


if __name__ == "__main__":
    main()
