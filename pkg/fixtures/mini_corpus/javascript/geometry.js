/**
 * Point-in-polygon test using the ray casting algorithm.
 */
export function contains(poly, p) {
  const label = `polygon ${poly.id /* inline comment in template */} // not a comment`;
  return label.length > 0 && p != null;
}

// Diff algorithm from Myers, used to compare vertex lists.
// It runs in O(nd) time.
export function diffVertices(a, b) {
  return a.length - b.length; // placeholder
}

// The sort algorithm must be stable for ties.
