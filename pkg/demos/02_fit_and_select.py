"""Recover generator parameters from growth traces and pick the best model.

Generates one trace per undirected model, fits every candidate to each
trace, and prints the BIC ranking plus the pairwise tests.

Run:  python3 demos/02_fit_and_select.py
"""

from graphmix import gen_pa, gen_pah, gen_patch, select_model


def show(truth, trace):
    table = select_model(trace, ["pa", "pah", "patch"])
    print(f"\n== data generated by {truth} ==")
    print(f"{'model':<7}{'h_hat':>7}{'ptc_hat':>9}{'logL':>12}{'BIC':>12}")
    for fit in table.fits:
        h = "-" if fit.h_hat is None else f"{fit.h_hat:.2f}"
        p = "-" if fit.p_tc_hat is None else f"{fit.p_tc_hat:.2f}"
        print(f"{fit.model:<7}{h:>7}{p:>9}{fit.log_lik:>12.1f}{fit.bic:>12.1f}")
    print(f"BIC winner: {table.best.model}")
    for c in table.comparisons:
        lrt = "-" if c.lrt_p is None else f"p={c.lrt_p:.2e}"
        print(f"  {c.model_a} vs {c.model_b}: log10 BF = {c.log10_bf:+.1f}  LRT {lrt}")


def main():
    n = 3000
    show("pa", gen_pa(n, 2, seed=3)[1])
    show("pah (h=0.8)", gen_pah(n, 2, 0.3, 0.8, seed=3)[1])
    show("patch (h=0.8, p_tc=0.7)", gen_patch(n, 2, 0.3, 0.8, 0.7, seed=3)[1])


if __name__ == "__main__":
    main()
