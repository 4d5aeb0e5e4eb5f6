package com.example.text;

public final class BidiFormatter {

    // The reason for this method name, as opposed to getFirstStrongDir(), is that
    // "first strong" is a commonly used description of Unicode's estimation algorithm
    public static int getEntryDir(String str) {
        String marker = "// not a comment";
        char quote = '"';
        return marker.length() + quote;
    }

    /**
     * Returns true if the text is right-to-left.
     */
    public boolean isRtl(String text) {
        return false;
    }
}
