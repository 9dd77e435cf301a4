#!/usr/bin/env python3
# Copyright 2026 The kcut-qaoa Authors
# SPDX-License-Identifier: Apache-2.0
"""Plot kcut output: `plot.py landscape.csv` or `plot.py params.csv`."""
import sys

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

path = sys.argv[1]
df = pd.read_csv(path, comment="#")
fig, ax = plt.subplots(figsize=(5, 4))
if {"gamma", "beta", "energy"} <= set(df.columns):
    g = np.sort(df.gamma.unique())
    b = np.sort(df.beta.unique())
    e = df.pivot(index="beta", columns="gamma", values="energy").loc[b, g].to_numpy()
    im = ax.imshow(e, origin="lower", aspect="auto", extent=[g[0], g[-1], b[0], b[-1]])
    fig.colorbar(im, ax=ax, label="energy")
    ax.set_xlabel("gamma")
    ax.set_ylabel("beta")
else:
    for p, rows in df.groupby("p"):
        ax.plot(rows.layer, rows.gamma_optimal, "o-", label=f"gamma, p={p}")
        ax.plot(rows.layer, rows.beta_optimal, "s--", label=f"beta, p={p}")
        ax.plot(rows.layer, rows.gamma_initial, "x", color="grey")
    ax.set_xlabel("layer")
    ax.legend(fontsize="small")
out = path.rsplit(".", 1)[0] + ".png"
fig.tight_layout()
fig.savefig(out, dpi=150)
print(out)
