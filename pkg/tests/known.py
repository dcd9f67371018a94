from drdlab.digraph import from_edge_list

# first 2-regular digraph on 5 vertices (row 0 fixed) that is not weakly
# distance-regular; found by scanning regular_digraphs(5, 2) in order
NON_WDRD_5 = from_edge_list(
    5, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 3), (2, 4), (3, 0), (3, 4), (4, 1), (4, 3)]
)
