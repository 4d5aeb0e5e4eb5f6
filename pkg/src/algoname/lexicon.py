"""Word lists for the built-in tagger.

Closed classes are near-complete for English. Open classes only cover words
common in code comments; everything unknown falls through to suffix rules.
"""


def _words(s: str) -> frozenset[str]:
    return frozenset(s.split())


DETERMINERS = _words("""
a an the this that these those each every some any no another either neither
all both half whatever whichever
""")

ADPOSITIONS = _words("""
of in on at by for with from into onto about over under between through during
before after above below without within via per against among amongst across
along around behind beyond like than upon toward towards since until till unlike
despite except inside outside near beside besides throughout underneath beneath
amid versus vs off out up down past
as if because while although though whether unless whereas whereby wherein
""")

CONJUNCTIONS = _words("and or but nor plus")

PARTICLES = _words("not n't to")

PRONOUNS = _words("""
i you he she it we they me him her us them my your his its our their mine yours
hers ours theirs myself yourself himself herself itself ourselves themselves
who whom whose which what something anything nothing everything someone anyone
everyone nobody somebody anybody everybody one's
""")

NUMBER_WORDS = _words("""
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
sixty seventy eighty ninety hundred thousand million billion
""")

MODALS = _words("""
can could will would shall should may might must is are was were be been am
do does did has have had
""")

ADVERBS = _words("""
very also only just then now here there so too again always never often already
still even however therefore thus hence rather quite almost else instead
otherwise perhaps maybe soon well back away once twice yet somewhat anyway
sometimes usually typically generally currently previously recently finally
actually really simply basically probably possibly necessarily merely nearly
exactly directly explicitly implicitly internally externally automatically
manually respectively accordingly approximately effectively efficiently
immediately initially eventually essentially entirely fully partially
completely correctly properly quickly slowly easily hardly mostly mainly
largely especially specifically particularly primarily roughly strictly
fairly pretty further furthermore moreover later earlier ahead forward
backward backwards upward downward elsewhere everywhere somewhere anywhere
nowhere together apart alone meanwhile namely likewise similarly
alternatively additionally conversely consequently subsequently recursively
iteratively lazily eagerly asynchronously synchronously randomly uniformly
""")

# -ly words that are not adverbs
LY_NON_ADVERBS = _words("""
only early likely unlikely friendly daily weekly monthly yearly hourly ugly
family supply apply reply assembly anomaly poly italy fly rely ally belly holy
jelly silly lonely lovely costly deadly elderly orderly
""")

# Verbs that are rarely nouns: tagged VERB wherever they occur.
PURE_VERBS = _words("""
accept accepts access achieve acquire adapt add adjust admit adopt advance
affect aggregate allocate allow alter analyse analyze announce annotate append
apply approximate argue arise arrange ask assemble assert assign assume attach
attempt avoid await become begin believe belong bind borrow bring calculate
cancel capture cause choose claim clarify clean clear close collapse collect
combine come compile complain complete compose compress compute concatenate
conclude configure confirm connect consider consist construct consume contain
continue convert copy correct correspond create customize deal decide declare
decode decompress decrease decrypt define delay delegate delete depend derive
describe deserialize destroy detach detect determine develop differ disable
discard disconnect discover dispatch distinguish divide document
duplicate emit enable encapsulate enclose encode encounter encrypt ensure enter
enumerate evaluate examine execute exist expand expect explain expose extend
extract fail fetch fill find finish fit fix flatten flush follow force format
forward free gather generate get give go grant grow guarantee handle happen hide
hold identify ignore illustrate implement import improve include increase
increment indicate inherit initialize initialise inject insert inspect install
instantiate integrate intend interpret introduce invalidate invert invoke iterate
join keep kill know launch lead learn leave let lie limit link listen live locate
look lose maintain make manage manipulate matter mean measure migrate
minimize maximize mirror miss modify monitor mount multiply mutate need negotiate
normalize notice notify obtain occur offer omit open operate optimize optimise
override own paint parse pass perform permit persist pick play
populate prefer prepare present preserve prevent print proceed produce prove
provide pull purge push put quit raise reach read realize rebuild receive
recompute reconstruct record recover redirect reduce refer reflect refresh
register reject release rely remain remember remove rename render reorder repeat
replace represent request require reset resize resolve respect respond restore
restrict retain retrieve reuse reverse rewrite rotate save say scale
see seek select send serialize serve share shift should show shrink shuffle
simplify skip solve specify spawn stop strip subtract succeed suggest
supply support suppose suspend swap take tell terminate think throw toggle
track transform translate traverse treat trigger trim truncate try turn unify
unlock unpack unregister unset update upgrade use validate verify visit wait
walk want warn write yield
""")

# Words that are nouns or verbs depending on context.
NOUN_VERB = _words("""
sort search hash place fall cast match test check call return process start end run set map
filter change lock load store build order rank count list index sum group split
balance cache clone crash design display drop estimate exchange fork head help
hint label lookup loop mark merge model move name note offset pack patch plan
post queue rate reference report rest round sample scan schedule scroll seed sign
signal size slice snapshot sleep source spell stack state step stream string
switch sync tag tap trace trade trust type union value view vote watch wrap
work blur compare point
""")

ADJECTIVES = _words("""
able abstract accurate active actual additional adjacent advanced aggressive
alternative ambiguous ancient annual apparent appropriate approximate arbitrary
asymmetric atomic available average aware bad balanced bare basic best better
bidirectional big binary blank blocking bold boolean brief broad broken bulky
canonical central certain cheap circular classic classical clean clear clever
close closed coarse common compact compatible complete complex compressed
concrete concurrent conditional consistent constant contiguous conventional
correct corresponding costly critical cryptographic cubic current custom cyclic
dangerous dark dead deep default definite dense deprecated deterministic
different difficult digital direct dirty discrete distinct distributed
double dual dynamic early easy effective efficient elegant empty encrypted
entire equal equivalent essential exact excellent exclusive existing expensive
experimental explicit exponential extended external extra faint fake false
familiar famous fancy fast final fine finite first fixed flat flexible foreign
formal former fresh full functional fundamental fuzzy general generic global
good graceful gradual great greedy hard heavy helpful heuristic hidden
hierarchical high huge human hybrid ideal identical illegal immediate
immutable implicit important impossible incomplete incorrect incremental
independent individual inefficient infinite informal initial inner insecure
internal invalid inverse irrelevant iterative joint key known large last late
lazy legacy legal less light likely linear little live local logical long loose
lossless lossy low lower main major manual many mathematical maximal maximum
mean minimal minimum minor missing mixed mobile modern modified modular more
most multiple mutable naive narrow native natural near nearest necessary
negative nested neural new next nice noisy nominal normal novel null numeric
numerical obvious odd old online open optimal optional ordinary original other
outer own parallel partial particular passive past perfect persistent physical
plain polynomial poor popular portable positive possible potential powerful
practical precise predictive preferred present previous primary prime
primitive principal prior private probabilistic probable professional proper
proprietary public pure quadratic quick random rapid rare raw ready real
reasonable recent recursive redundant regular related relative relevant
reliable remote responsive reverse rich right robust rough safe same scalable
secondary secure semantic sensitive separate sequential serial serverside
several shallow sharp short significant similar simple single slow small smart
smooth soft sole solid sophisticated sparse spatial special specific speculative
stable standard static statistical steady stochastic straightforward strict
strong structural subsequent successful sufficient suitable super symmetric
synchronous syntactic technical temporal temporary ternary theoretical thin
tight tiny top total traditional transparent trivial true typical unary
uncompressed unique universal unknown unsafe unsigned unstable unused unusual
upper useful usual valid various vast verbose virtual visible weak weighted
whole wide wrong young
""")

# Nouns that the -al/-ive/-able/-ous suffix rules would otherwise take as ADJ.
SUFFIX_NOUNS = _words("""
interval signal terminal portal total journal material proposal arrival removal
retrieval approval trial tutorial manual literal channel animal capital
hospital festival goal deal meal metal pedal petal rival vial dial decimal
criminal archive directive objective drive hive motive detective executive
representative table variable cable vegetable label fable
""")

# -ing words that are plain nouns
ING_NOUNS = _words("""
string thing nothing something anything everything ring king spring wing
ceiling morning evening ping bring sing
""")

ADJ_SUFFIXES = ("ous", "ive", "al", "able", "ible", "ful", "less")
