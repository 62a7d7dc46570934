//! Brute-force reference implementations for small graphs. Every function
//! here works from the edge set alone and shares no code with the library's
//! metric kernels.

#![allow(dead_code)]

use astopo::Graph;
use rand::Rng;

/// Connected graph on `n` nodes: a random spanning tree plus each remaining
/// pair independently with probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Floyd–Warshall hop distances; `usize::MAX` marks unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if a[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Mean distance from each node to every other node.
pub fn mean_distances(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let d = distances(g);
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| w != v)
                .map(|w| d[v][w] as f64)
                .sum::<f64>()
                / (n - 1) as f64
        })
        .collect()
}

/// Endpoint-inclusive betweenness divided by `N`, from explicit enumeration
/// of every shortest path between every ordered pair.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let d = distances(g);
    let mut cb = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut stack = vec![vec![s]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                if last == t {
                    paths.push(path);
                    continue;
                }
                for w in 0..n {
                    if a[last][w] && d[s][w] == path.len() && d[w][t] + path.len() == d[s][t] {
                        let mut next = path.clone();
                        next.push(w);
                        stack.push(next);
                    }
                }
            }
            let total = paths.len() as f64;
            for path in &paths {
                for &v in path {
                    cb[v] += 1.0 / total;
                }
            }
        }
    }
    cb.iter().map(|c| c / n as f64).collect()
}

/// Triangles through each node, by scanning every node triple.
pub fn triangles(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let mut t = vec![0; n];
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if a[x][y] && a[y][z] && a[x][z] {
                    t[x] += 1;
                    t[y] += 1;
                    t[z] += 1;
                }
            }
        }
    }
    t
}

pub fn triangle_total(g: &Graph) -> u64 {
    triangles(g).iter().sum::<u64>() / 3
}

/// Simple 4-cycles through each node, by scanning every 4-node subset and
/// its three distinct cyclic orders. Chords do not matter.
pub fn quadrangles(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let mut q = vec![0; n];
    for w in 0..n {
        for x in w + 1..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let orders = [[w, x, y, z], [w, x, z, y], [w, y, x, z]];
                    for c in orders {
                        if (0..4).all(|i| a[c[i]][c[(i + 1) % 4]]) {
                            for v in c {
                                q[v] += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    q
}

pub fn quadrangle_total(g: &Graph) -> u64 {
    quadrangles(g).iter().sum::<u64>() / 4
}

/// `phi(r)` for `r = 2..=N` with nodes ranked by degree, ties by id.
pub fn rich_club(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.deg(v)), v));
    (2..=n)
        .map(|r| {
            let top = &order[..r];
            let mut e = 0;
            for i in 0..r {
                for j in i + 1..r {
                    if a[top[i]][top[j]] {
                        e += 1;
                    }
                }
            }
            e as f64 / (r * (r - 1) / 2) as f64
        })
        .collect()
}

/// Mean degree of each node's neighbors.
pub fn knn(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let deg: Vec<usize> = (0..n)
        .map(|v| a[v].iter().filter(|&&b| b).count())
        .collect();
    (0..n)
        .map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&w| a[v][w]).collect();
            nb.iter().map(|&w| deg[w] as f64).sum::<f64>() / nb.len() as f64
        })
        .collect()
}
