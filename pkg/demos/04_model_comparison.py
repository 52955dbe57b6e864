"""
Ranking the seven models on combined-task data
==============================================

Fit every candidate model to one synthetic block per experiment and
print the r-squared ranking. On translation-only data the classic
one-index models do fine; once rotation enters the task they fall
behind the two-index model.

If matplotlib is installed, also scatter the winning model's predicted
difficulty against the per-condition mean movement times.
"""

from fitts3d import (InteractionKind, ModelKind, build_comparison_report,
                     build_grid, generate_trials, paper_scale_defaults,
                     render_comparison)

interaction = InteractionKind.POINTING

for experiment in ("e1", "e3", "e4"):
    grid = build_grid(experiment, interaction)
    truth = paper_scale_defaults(experiment, interaction)
    trials = generate_trials(grid, truth, interaction)
    report = build_comparison_report(trials, list(ModelKind), aggregate=True)
    print(f"== {experiment} ==")
    print(render_comparison(report, "table"))

    if experiment == "e4":
        try:
            import matplotlib
            matplotlib.use("Agg")
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib not installed, skipping the plot")
            continue
        top = report.rows[0]
        # project the fitted plane onto one axis for a quick look
        coef = top.coefficients
        xs = [coef["intercept"] + sum(coef[n] * v for n, v in
                                      zip(top.point_names[:-1], p[:-1]))
              for p in top.points]
        ys = [p[-1] for p in top.points]
        fig, ax = plt.subplots(figsize=(5, 4))
        ax.scatter(xs, ys, s=14)
        lo, hi = min(xs), max(xs)
        ax.plot([lo, hi], [lo, hi], lw=1)
        ax.set_xlabel("predicted MT (s)")
        ax.set_ylabel("observed mean MT (s)")
        ax.set_title(f"{top.model} on {experiment}, r2 = {top.r2:.3f}")
        fig.tight_layout()
        fig.savefig("/tmp/e4_fit_scatter.png", dpi=110)
        print("saved /tmp/e4_fit_scatter.png")
