"""How homophily changes minority visibility in degree-based rankings.

Sweeps the homophily parameter of the directed model and prints the
top-k% minority share, the ranking Gini, and the mean inequity (ME).

Run:  python3 demos/03_ranking_visibility.py
"""

import numpy as np

from graphmix import gen_directed, rank_report


def main():
    f_m = 0.2
    print(f"population minority fraction: {f_m}")
    print(f"{'h':>5}{'top-5%':>9}{'top-10%':>9}{'top-50%':>9}{'gini':>8}{'ME':>8}")
    for h in (0.2, 0.5, 0.8):
        vals = {5: [], 10: [], 50: []}
        ginis, mes = [], []
        for seed in range(5):
            g, _ = gen_directed("dpah", 2000, 0.005, f_m, h, seed=seed)
            rep = rank_report(g, "indegree")
            ks = rep.curve.ks.tolist()
            for k in vals:
                vals[k].append(rep.curve.fractions[ks.index(k)])
            ginis.append(rep.gini)
            mes.append(rep.me)
        print(
            f"{h:>5.1f}"
            f"{np.median(vals[5]):>9.3f}{np.median(vals[10]):>9.3f}"
            f"{np.median(vals[50]):>9.3f}{np.median(ginis):>8.3f}{np.median(mes):>+8.3f}"
        )
    print("\nME > 0: ranking amplifies the minority; ME < 0: it reduces them.")


if __name__ == "__main__":
    main()
