#pragma once

// Implements the Unicode Bidirectional Algorithm for mixed-direction runs.
// See UAX #9 for the full rules.
class Bidi {
public:
    /// Resolves embedding levels with the Unicode bidirectional algorithm.
    void resolve();
};
