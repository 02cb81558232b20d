from collections import deque


class Graph:
    """An undirected graph stored as adjacency lists."""

    def __init__(self, vertices):
        self.neighbors = [[] for _ in range(vertices)]

    def add_edge(self, start, end):
        self.neighbors[start].append(end)
        self.neighbors[end].append(start)

    def distances(self, start):
        """Breadth first search.

        Args:
            start: The first vertex to visit.

        Returns:
            A list with the distance to every vertex, -1 when it cannot be
            reached.
        """
        distance = [-1] * len(self.neighbors)
        distance[start] = 0
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for following in self.neighbors[current]:
                if distance[following] < 0:
                    distance[following] = distance[current] + 1
                    queue.append(following)
        return distance
