package com.example.stats;

/**
 * Runs the estimation algorithm over the sample window.
 */
public class Estimator {
    private final String sql = """
        SELECT * FROM samples -- /* text block, not a comment */
        """;

    // Binary search algorithm over the sorted sample index.
    int find(int[] a, int key) {
        int lo = 0, hi = a.length - 1;
        while (lo <= hi) {
            int mid = (lo + hi) >>> 1;
            if (a[mid] < key) lo = mid + 1; else if (a[mid] > key) hi = mid - 1; else return mid;
        }
        return -1;
    }

    /* The binary search algorithm requires the index to be sorted first. */
    void sortIndex() {}
}
