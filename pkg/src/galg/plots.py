"""Optional matplotlib renderings for the report-style CLI outputs."""

from __future__ import annotations


def _axes(path: str, nrows: int = 1):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(nrows, 1, figsize=(6, 3 * nrows), squeeze=False)
    return plt, fig, [ax for (ax,) in axes]


def render_hilbert(hilbert: list[int], path: str, title: str = "Hilbert function") -> None:
    plt, fig, (ax,) = _axes(path)
    degrees = list(range(len(hilbert)))
    ax.bar(degrees, hilbert, color="#4878a8")
    ax.set_xlabel("degree")
    ax.set_ylabel("dim")
    ax.set_xticks(degrees)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_fingerprint(payload: dict, path: str) -> None:
    """Two panels: the Hilbert vector and the commutator dimensions by degree."""
    plt, fig, (ax1, ax2) = _axes(path, nrows=2)
    hilbert = payload["hilbert"]
    degrees = list(range(len(hilbert)))
    ax1.bar(degrees, hilbert, color="#4878a8")
    ax1.set_ylabel("dim A_d")
    ax1.set_xticks(degrees)
    ax1.set_title("Hilbert function")
    comm = payload["commutator_dims"]
    cdeg = list(range(2, 2 + len(comm)))
    ax2.bar(cdeg, comm, color="#a85448")
    ax2.set_xlabel("degree")
    ax2.set_ylabel("dim [A_1, A_{d-1}]")
    ax2.set_xticks(cdeg)
    ax2.set_title("Commutator subspace dimensions")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
