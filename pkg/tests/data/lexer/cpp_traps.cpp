auto r = R"delim(/* not a comment */ // nor)delim";
int n = 1'000'000; // digit separators
/// doc line
/** javadoc-ish
 * second line
 */
std::string u = u8"// utf8 string";
