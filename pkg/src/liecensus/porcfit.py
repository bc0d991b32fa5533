"""Fitting per-residue-class polynomials to integer-valued prime samples.

A function is accepted as "polynomial on residue classes" at a modulus N
and degree bound only if, within every residue class, an exact rational
interpolation through the first degmax+1 samples reproduces every remaining
sample exactly.  Failure to do so is a *rejection* (a legitimate negative
answer with a suggestion), distinct from a refusal (not enough samples).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .caps import RefusalError
from .modules import _lagrange_fit, poly_eval


@dataclass
class ResidueClassFit:
    residue: int
    coeffs: tuple          # Fractions, ascending degree
    sample_primes: tuple
    held_out_primes: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def evaluate(self, p):
        v = poly_eval(self.coeffs, p)
        if v.denominator != 1:
            raise ValueError(f"fit is not integral at {p}")
        return v.numerator

    def coeff_strings(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


@dataclass
class PorcFormula:
    modulus: int
    degmax: int
    classes: dict = field(default_factory=dict)  # residue -> ResidueClassFit

    def evaluate(self, p):
        r = p % self.modulus
        if r not in self.classes:
            raise ValueError(f"no fitted class for residue {r} mod {self.modulus}")
        return self.classes[r].evaluate(p)

    def to_jsonable(self):
        return {
            "modulus": self.modulus,
            "degmax": self.degmax,
            "classes": [
                {
                    "residue": r,
                    "degree": fit.degree,
                    "coeffs": fit.coeff_strings(),
                    "sample_primes": list(fit.sample_primes),
                    "held_out_primes": list(fit.held_out_primes),
                }
                for r, fit in sorted(self.classes.items())
            ],
        }


@dataclass
class PorcRejection:
    modulus: int
    degmax: int
    residue: int
    prime: int
    expected: int
    predicted: Fraction
    suggestion: str

    def to_jsonable(self):
        return {
            "rejected": True,
            "modulus": self.modulus,
            "degmax": self.degmax,
            "residue": self.residue,
            "prime": self.prime,
            "expected": str(self.expected),
            "predicted": str(self.predicted),
            "suggestion": self.suggestion,
        }


def porc_fit(samples, modulus, degmax):
    """Fit samples {prime: value} per residue class mod `modulus`.

    Returns a PorcFormula on success or a PorcRejection when a held-out
    sample disagrees; raises RefusalError when some populated class has
    fewer than degmax + 2 samples (no held-out point would remain).
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    by_residue = {}
    for p in sorted(samples):
        by_residue.setdefault(p % modulus, []).append(p)
    for r, ps in by_residue.items():
        if len(ps) < degmax + 2:
            raise RefusalError(
                f"residue class {r} mod {modulus} has {len(ps)} samples; "
                f"need at least {degmax + 2} (degmax+1 to fit, one held out)",
                estimate=degmax + 2,
            )
    formula = PorcFormula(modulus=modulus, degmax=degmax)
    for r, ps in sorted(by_residue.items()):
        fit_ps = ps[: degmax + 1]
        held = ps[degmax + 1 :]
        coeffs = _lagrange_fit([(p, samples[p]) for p in fit_ps])
        for p in held:
            predicted = poly_eval(coeffs, p)
            if predicted != samples[p]:
                return PorcRejection(
                    modulus=modulus,
                    degmax=degmax,
                    residue=r,
                    prime=p,
                    expected=samples[p],
                    predicted=predicted,
                    suggestion=(
                        "not PORC at this (N, degmax); retry with a larger "
                        "modulus N or a larger degmax"
                    ),
                )
        formula.classes[r] = ResidueClassFit(
            residue=r,
            coeffs=coeffs,
            sample_primes=tuple(fit_ps),
            held_out_primes=tuple(held),
        )
    return formula


def fit_with_search(samples, max_modulus=12, max_degree=2):
    """Smallest (modulus, degree) pair, in product order, that fits exactly.

    Used by the acceptance suite: tries divisor-friendly moduli in
    increasing order and returns the first accepted formula.
    """
    moduli = [N for N in range(1, max_modulus + 1) if max_modulus % N == 0]
    for N in moduli:
        for deg in range(0, max_degree + 1):
            counts = {}
            for p in samples:
                counts.setdefault(p % N, 0)
                counts[p % N] += 1
            if min(counts.values()) < deg + 2:
                continue
            result = porc_fit(samples, N, deg)
            if isinstance(result, PorcFormula):
                return result
    return None
