"""Pure-Python sweep kernels (fallback when the compiled extension is absent).

Both backends share the same contract: postfix code evaluated over every
assignment of ``k`` variables to elements ``0..n-1`` in lexicographic order,
first variable most significant.  Opcodes: ``i >= 0`` push variable ``i``,
``-1`` push element 0, ``-2`` pop two and push the table product.
"""

from array import array
from itertools import product

BACKEND = "python"


def _eval(code, assignment, n, flat):
    stack = []
    push = stack.append
    pop = stack.pop
    for op in code:
        if op == -2:
            b = pop()
            a = pop()
            push(flat[a * n + b])
        elif op == -1:
            push(0)
        else:
            push(assignment[op])
    return stack[0]


def first_divergence(lhs_code, rhs_code, n, flat, k):
    """Index of the first assignment where the two codes differ, or -1."""
    for idx, assignment in enumerate(product(range(n), repeat=k)):
        if _eval(lhs_code, assignment, n, flat) != _eval(rhs_code, assignment, n, flat):
            return idx
    return -1


def fingerprint(code, n, flat, k):
    """Values of ``code`` over the full assignment sweep, as packed bytes."""
    out = array("q", bytes(8 * n ** k))
    for idx, assignment in enumerate(product(range(n), repeat=k)):
        out[idx] = _eval(code, assignment, n, flat)
    return out.tobytes()
