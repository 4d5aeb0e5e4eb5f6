/* Uses the Insertion Sort algorithm for short runs of fewer than 16 items. */
void small_sort(int *v, int n)
{
	int i, j;
	for (i = 1; i < n; i++) {
		int x = v[i];   // value being placed
		for (j = i; j > 0 && v[j - 1] > x; j--)
			v[j] = v[j - 1];
		v[j] = x;
	}
}

// Reference: a textbook quick sort algorithm with median-of-three pivots.
// The implementation lives in qsort.c.
