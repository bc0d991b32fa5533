"""Report figures rendered to files alongside the delimited output.

Matplotlib is imported lazily so the CLI stays fast when no figure is
requested; the Agg backend keeps everything headless.
"""


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def census_figure(rows, path):
    """Counts against the prime, one line per exponent n."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 4))
    by_n = {}
    for row in rows:
        by_n.setdefault(row.n, []).append((row.p, row.count))
    for n, pts in sorted(by_n.items()):
        pts.sort()
        ax.plot(
            [p for p, _ in pts],
            [c for _, c in pts],
            marker="o",
            label=f"n = {n}",
        )
    ax.set_xlabel("prime p")
    ax.set_ylabel("isomorphism classes")
    ax.set_title("Class-2 Lie rings with central Frattini ideal")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def porc_figure(samples, formula, path):
    """Sample points and the fitted per-residue-class polynomials."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 4))
    ps = sorted(samples)
    ax.scatter(ps, [samples[p] for p in ps], color="black", zorder=3, label="samples")
    if formula is not None:
        lo, hi = min(ps), max(ps)
        grid = range(lo, hi + 1)
        for r, fit in sorted(formula.classes.items()):
            xs = [x for x in grid if x % formula.modulus == r]
            if len(xs) < 2:
                xs = [x for x in range(lo, hi + formula.modulus + 1) if x % formula.modulus == r]
            ys = [float(sum(float(c) * x**k for k, c in enumerate(fit.coeffs))) for x in xs]
            ax.plot(xs, ys, alpha=0.7, label=f"residue {r} mod {formula.modulus}")
    ax.set_xlabel("prime p")
    ax.set_ylabel("count")
    ax.set_title("PORC fit")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
