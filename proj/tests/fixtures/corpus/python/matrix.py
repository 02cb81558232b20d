"""Matrix helpers that work on lists of lists."""


def zeros(rows, columns):
    return [[0] * columns for _ in range(rows)]


def multiply(left, right):
    """Multiplies two matrices.

    :param left: a matrix with n columns
    :param right: a matrix with n rows
    :returns: the product matrix
    :rtype: list
    """
    result = zeros(len(left), len(right[0]))
    for r, row in enumerate(left):
        for c in range(len(right[0])):
            result[r][c] = sum(row[k] * right[k][c] for k in range(len(right)))
    return result


def transpose(matrix):
    return [list(column) for column in zip(*matrix)]
