#include <stdio.h>
/* block one */
const char *s = "/* not a comment */ // nor this";
char c = '"'; // after char literal
char d = '\''; /* escaped quote
   spans lines */
// run line one
// run line two

// run line three after blank
int x = 1; // trailing
#define M(a) \
    a /* in macro */
