#ifndef SkTSort_DEFINED
#define SkTSort_DEFINED

/** Sorts the array of size count using comparator lessThan using an Insertion
 *  Sort algorithm.
 */
template <typename T, typename C>
static void SkTInsertionSort(T* left, int count, C lessThan);

/* Swaps two elements; the quick sort algorithm calls this in its partition step. */
static inline void sk_swap(int *a, int *b) { int t = *a; *a = *b; *b = t; }

#endif
