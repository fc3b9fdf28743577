from colorref import new_graph


def path_graph(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves):
    return new_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
