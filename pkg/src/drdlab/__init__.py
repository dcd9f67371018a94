"""Distance-regular and strongly regular digraphs: recognizers, generators,
exact connectivity with minimum-cut enumeration, and a claim-checking harness."""

__version__ = "0.1.0"

from drdlab.digraph import Digraph, from_edge_list  # noqa: E402

__all__ = ["Digraph", "from_edge_list", "__version__"]
