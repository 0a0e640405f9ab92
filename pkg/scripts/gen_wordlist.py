#!/usr/bin/env python3
"""Regenerate the bundled English dictionary (src/apptopics/data/english_words.txt).

The bundled dictionary is deliberately compact: a hand-picked common-word
core, the vocabulary of the sample-app fixtures (minus known junk tokens),
and inflected forms of the core validated against a large reference list
(`words.txt` from npm `word-list@4.1.0`). A compact list keeps the
GUI-noise filter selective; exhaustive lists admit OCR junk such as "fabs".

Usage:
    python scripts/gen_wordlist.py [path/to/words.txt]
"""

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
OUT = REPO / "src" / "apptopics" / "data" / "english_words.txt"
FIXTURES = REPO / "tests" / "data" / "london_app"

# tokens from the fixture streams that are not English words and must stay
# out of the dictionary (they feed the non-English / GUI-noise paths)
JUNK = {
    "varargs", "winw", "fabs", "restaurantsamppubs", "restaurantsamppub",
    "streetview", "pois", "amp", "im", "na", "mm", "ow", "ith",
}

IRREGULAR_PLURALS = """
children men women mice feet teeth geese people oxen indices matrices
vertices analyses crises leaves lives knives wives halves shelves wolves
loaves
"""

BASE_LEMMAS = """
about above accept access account accurate act action active activity add
address adjust adult advance advert advice afghan african again age agree
air alarm album albanian alert all allow alone alphabet also always american
amount analysis anatomy and angle animal animation answer any apartment app
appear apple application apply appointment arcade area argentinian arm
armenian army around array arrive art article asian ask assign attach attempt
audio australian austrian author auto available average avoid award away baby
back background bad badge bag balance ball band bank bar barbecue base basic
basket battery battle beach bear beat beautiful because become bed bedroom
beer begin behavior belgian bell belong below best better between big bike
bill bin bind bird birth bistro bit black blank block blood blue board boat
body book bonus border both bottle bottom bowl box boy brain brazilian bread
break breakfast bridge brief bright bring british broadcast brown browse
browser brush budget buffer bug build building bulk burmese bus business
busy buy cache cake calculate calculation calendar call cambodian camera
camp can canadian cancel candy capital capture car card care career caribbean
carry cart case cash casino casual cat catalog catch category cell center
cerebral certain chain chair challenge chance change channel chapter character
charge chart chat cheap check checklist cheese chess chicken child chilean
chinese choice choose church cinema circle city class classic clean clear
click client climb clinic clock close cloud club coach coast code coffee
coin cold collect collection college colombian color column combine come
comic command comment common communication community compare compass complete
complex compute computer concert condition confirm connect connection
consonant contact contain content contest context continue control convention
convert cook cookie cool copy core corner correct cortex cost could count
counter country county course court cover crash cream create creator credit
cricket crime croatian cross crown cuban culture cup currency current custom
customer cut czech daily dance dark dash data database date day deal debug
decide deck decode decrease deep default defense delete deliver delivery
demo dentist depart department describe descendant design desktop dessert
detail detect device dial dialog diamond dictionary die diet different digit
dinner direction directory disable discount discover dish dismiss display
distance doctor document dog dollar domain done door double down download
dozen draft drag draw dream dress drink drive driver drop drug drum dutch
duration duty each early earn earth east easy eat economy ecuadorian edge
edit editor education educational effect egyptian element elevation else
email empty enable encode end enemy energy engine english enhance enjoy
enough enter entertainment entry episode equal error ethiopian europe
european even evening event ever every exact exam example except exception
exchange exclude excuse exercise exit expand expect expense expert explore
export expose extra face fact fail failure fair fall family fan fantasy far
farm fashion fast favorite feature feed feel festival fetch fever field
fight figure file fill filter final finance find fine finger finish fire
first fish fit fitness fix flag flash flight flip float floor flower flush
fly focus fold folder follow food foot football force forecast form format
forum forward fountain frame free freeze french fresh friend from front
fruit fuel full fun funny future gallery game garden gas gate gear general
generate gentle german gesture ghost gift girl give glass global goal gold
golf good grade grand graph great greek green grid grocery group grow guard
guess guest guide guitar gym hair half hand handle happy hard hardware have
head health healthy hear heart heavy hello help here hero hidden hide high
highway hill hint history historic hit hobby hockey hold hole holiday home
hope horse hospital host hot hotel hour house how hungarian hungry hunt
icon idea identify image imperial import important improve inch include
increase index indian indonesian industry info information input insert
inside install instance instant instrument insurance interaction interest
interface internal international internet interpolation interval intent
introduce invalid invite irish israeli issue italian item jamaican japanese
job join joke journal journey joy jump just keep keyboard kick kid kind king
kitchen knife know korean label lake land landmark language large last late
launch layer layout lead leaf league learn leave lebanese left legal lemon
length lesson letter level library license life lifestyle light like limit
line link lion list listen listener lite little live load loan local locate
location lock log login logo london long look loop lose loud love low lucky
lunch machine magazine magic mail main major make malaysian man manage
manager manual map margin mark market match material math matter maximum
meal mean measure meat media medical medicine mediterranean medium meet
member memory menu merge message meter metric mexican middle might mile
milk mind mine minimum minute mirror miss mission mix mobile mode model
modern moment money mongolian monitor month monument mood moon more moroccan
most motion mountain mouse move movie much multiple museum music must name
nation native nature navigate navigation near need neighborhood nepali
network never new news nice night noise normal north note notebook nothing
notice notification now number nurse object observe occur ocean offer office
offline offscreen often once one only open operation option orange order
organ organic other out outside over overlay override own owner pack package
page paint pair panel paper parcel parent park parse part partner party pass
passenger password past pasta path patient pattern pause pay payment peace
pen people perform performance period permission persian person pet phase
philippine phone photo photograph physiology piano pick picture piece pig
pilot pitch pizza place plan plane planet plant plate play player please
plugin pocket poi point polish poll pool pop popular port portrait portuguese
position post poster pound power practice prepare present press pretty
preview price primary prime print printer priority privacy prize pro problem
process produce product profile program progress project promise prompt
proof property protect proud provide provider proximity pub public publish
pull pulse pump purchase pure purple push puzzle quality quarter query
question quick quiet quiz quote race racing radio rail rain random range
rank rate rather reach read reader ready real reason receipt receive recent
recipe recommend record recover red reduce reference refresh region register
regular relax release religious reload remember remind remote remove rename
render rent repair repeat replace reply report request require rescue reset
resize resource rest restaurant restore result resume retail retain return
reverse review reward rich ride right ring rise risk river road rock role
roll romanian room root rotate round route router row royal rule run rural
russian safe safety sale sample satellite save scale scan scene schedule
school science score scottish screen scroll sea seafood search season seat
second secret section secure security see seed select sell send sensor
sentence serial series serve server service session set setting settings
several shadow shake shape share shift ship shop short should show shut
side sign signal silver simple since sing single site size skill skin skip
sleep slide slow small smart smile snake snow soccer social socket soft
software solar solution solve some song sort sound source south space
spanish speak special speech speed spell spend spin spirit split sport spot
spread spring square stack staff stage stand standard star start state
station statistics status stay steam step stick stock stop storage store
story stream street stress stretch strike string strong student studio
study stuff style submit subscribe success such sugar suggest suite summary
summer sun supply support sure surface surprise survey sushi swedish sweet
swim swiss switch symbol sync system tab table tag taiwanese take talk tank
tap target task taste tax tea teach teacher team tech temperature template
temple tennis term test text thai thank theater theme then theory there
these thing think this tibetan ticket time timer tip title toast today
together toilet tone tool top topic total touch tour tourist tower town
track trade traffic train training transaction transfer transit translate
transport transportation travel treasure treat tree trick trip truck tunisian
turkish turn tutorial type under understand unit universe unknown unlock
until update upgrade upload upon urban usage use useful user vacation valid
variable vegetarian vehicle verify version very video vietnamese view
village visit visual vocabulary voice volume vote vowel wait walk wall
wallet wallpaper want war warm warn watch water waterfall wave way weak
wear weather web website week weekend weight welcome well west wheel when
where which white whole wide widget width wifi wild will win wind window
wine winner winter wish with within without wizard woman wonder wood word
work worker workout world worry worth would write writer wrong xylophone
yard year yellow yesterday yet yoga young your zebra zero zone zoom
abort absent absolute abstract accent accident accord ace achieve acquire
acre adapt adopt advantage adventure aerial affect afford agenda agent
ahead aim aisle alien align alike alive alley alloy ally almost aloud
alpha alter amateur amaze ambient amend among amuse ancient anger angry
ankle announce annoy annual anon antenna antique anxious apart apologize
appeal appendix appetite applaud approach approve april arcane arch arena
argue arise arrange arrest arrow ascend ash aside asleep aspect assault
assemble assess asset assist assume assure asterisk astronaut athlete
atlas atom attack attend attitude attract auction audit august aunt aura
autumn avenue awake awesome awful awkward axis bachelor backup bacon
badly bake balcony bald ballet balloon ballot bamboo banana banner
banquet baptize barely bargain bark barn barrel barrier basement bash
basin bass bat batch bath bathe bay beam bean beard beast beauty beaver
beckon bee beef belt bench bend benefit berry beside bet beta beyond bias
bicycle bid bind biology birthday biscuit bishop bite bitter blade blame
blanket blast blaze bleed blend bless blind blink bliss blossom blow
blur blush boast bold bolt bomb bond bone boost boot booth border bore
borrow boss bounce bound bouquet bow bowling boxer brace bracket brake
branch brand brass brave breath breathe breed breeze brew brick bride
brief brilliant brisk broad broken bronze broom brother bubble buckle
bud buddy buffalo bulb bull bullet bump bunch bundle bunker burden
burger burn burst bury bush butter buzz cabin cabbage cable cactus cage
calm camel campus canal candle cane canvas canyon cape captain caption
carbon cargo carpet carrot carve castle casual cattle caution cave cease
celebrate cement census cereal ceremony chalk champion chaos chapel
charm chase cheat cheer chef cherry chest chew chief chill chin chip
choir chop chorus chrome chunk churn cider cigar circus cite citizen
civil claim clap clarify clause claw clay clerk clever cliff climate
cling clip cloth cloud clown clue cluster clutch coal coarse coat
cobweb cocoa coconut coil collapse collar combat comfort commit
companion company compose conceal concede concept concern concert
conclude concrete condemn conduct cone confess confide congress
conquer consent consider consist console construct consult consume
convey convince coral cord cork corn corps cosmic costume cottage
cotton couch cough council counsel courage cousin cradle craft crane
crawl crazy credit creek crew crisp critic crop crowd crucial cruel
cruise crumb crunch crush crystal cube cuisine cult cupboard curb cure
curious curl curtain curve cushion cycle dairy daisy damage damp dare
darling dawn dazzle deaf dear debate debris debut decade decay decent
declare decline decorate decrease dedicate defeat defend define defy
degree delay delight demand demise denial dense deny depend deposit
depth deputy derive descend describe desert deserve desire despair
destroy detach develop devote devour dew diagram dice differ dig
dignity dilemma dim diminish dinosaur direct dirt disagree disappear
disaster discuss disease disguise disgust disk dismiss disorder dispute
distant distinct distract ditch dive divert divide divine divorce dizzy
dock dodge doll dolphin donate donkey donor dose dot dove draft drain
drama drastic dread drift drill drip drought drown dry duck dumb dune
dusk dust dwarf dwell eager eagle earl earnest ease east echo eclipse
ecology edible eel effort egg eight either elbow elder electric elegant
elephant elevator elite else embark embody embrace emerge emotion
employ empower enact endless endorse enforce engage enlist enrich
enroll ensure entire envelope episode equip era erase erode erupt
escape essay essence estate eternal ethics evidence evil evoke evolve
exceed exceedingly excel excess excite exotic expand expire explain
expression extend extent eyebrow fabric facade faculty fade faint faith
falcon fame fancy fatal fatigue fault favor fawn fear feast feather
federal fee feeble fellow felt female fence fern ferry fertile fever
few fiber fiction fierce fifteen fifty fig film fierce fin firm fiscal
fist fitful five flame flat flavor flaw flee fleet flesh flick float
flock flood flour flow fluid flush foam fog foil fond forecast forest
forget forgive fork fortune forty forum fossil foster foul fox fragile
frequent frog frost frown frozen fund funny fur fury gadget gain galaxy
gallery gallon gamble gap garage garbage garlic garment gasp gather
gauge gaze gene genius gentle genuine geometry gem giant giggle ginger
giraffe glad glance glare gleam glide glimpse globe gloom glory glove
glow glue goat goddess goose gorilla gospel gossip govern gown grab
grace grain grant grape grasp grass gravity gray graze grease greet
grief grill grin grind grip groan grocer groom groove gross ground
grove grudge grunt guarantee guilt gulf gull gust gut habit hail hairy
hammer hamster harbor harsh harvest haste hasty hatch hate haul haven
hawk hazard haze hazel heal heap heat hedge heel hefty height helmet
hen herb herd hesitate hill hip hire hiss hive hoard hobby hog hollow
holy honest honey hood hoof hook horizon horn horror hound hover howl
hug huge hull hum humble humor hunger hurdle hurl hurry hurt hush hut
hybrid hygiene hymn ideal identity idle idol ignite ignore ill illegal
illness imitate immense immune impact imply impose impress impulse
inch incident income indeed indoor infant inflict inform inhale inherit
initial inject injure injury inmate inner innocent insane insect insist
inspect inspire intact intend invent invest involve iron island isolate
ivory jacket jade jaguar jail jam jar jaw jazz jealous jelly jewel
jingle jolly jolt judge juice july junction june jungle junior junk
jury justice kangaroo keen kernel kettle kidney kingdom kiss kit kite
kitten knee kneel knit knob knock knot lab lace ladder lady lamb lamp
lane lap lapse lard laser latch latin latitude laugh laundry lava lawn
lawsuit lazy lecture ledge legend lemonade lend lens leopard lethal
liar liberty lick lid lift limb lime limp linen linger lip liquid
litter lively liver lizard lobby lobster lodge loft lonely loose lord
lorry loss lost lotion lottery lounge loyal luggage lumber lump lunar
lung lure lurk luxury lyric mad madam magnet maid mail maize mammal
mandate mango mansion manor maple marble march mare margin marine
mask mass mast master mat matrix mature meadow meddle meek mellow melody
melt mercy mere merit merry mesh mess metal method midst mighty mild
mill million mimic mineral mingle miracle mist mistake mob mock moist
mole monarch monk monkey monster moral morning mosque moss motel moth
mother motive motor mount mourn mouth mud mule multiply mumble murmur
muscle mushroom mustard mute mutter mutual myth nail naive nap napkin
narrow nasty navy neat neck needle neglect nephew nerve nest net nickel
niece noble nod nominal noon north nose notch novel nudge numb nut oak
oath obey oblige obscure observe obtain obvious occasion odd odor offend
oil old olive omit onion onset opera oppose oral orbit orchard ordinary
ore organ orient origin ornament orphan ostrich otter ought ounce outer
oval oven owl oyster ozone pad paddle pact pale palace palm panda panic
panther pant pardon parlor parrot parcel partial pastel pastor pasture
patch patio patrol patron pave paw peak peanut pear peasant pebble peck
peel peer pelican penalty pencil penny pepper perch perfect peril perish
permit persist pest petal petty phantom phrase pickle picnic pier pigeon
pile pill pillar pillow pinch pine pink pint pioneer pipe pirate pistol
piston pity pivot plank plasma platform plaza plead pledge plenty plot
plow pluck plug plum plumber plump plunge poem poet poise poke polar
pole pond pony porch pork porter portion pose possess pot potato pouch
pounce pour poverty powder prairie praise pray preach precise predict
prefer premise presence pretend prevail prevent prey pride priest
prince princess prior prison probe proceed proclaim profit profound
prone pronounce proper propose prose prosper proverb prowl prune pry
pudding puddle puff pumpkin punch punish pupil puppet puppy purse
pursue quaint quake quarrel quart queen quench quest queue quill quilt
quit quiver rabbit raccoon rack radar radiant radius raft rage raid
rail rally ranch rapid rare rash rat rattle raven raw ray razor rebel
recall reckon recline recruit reef reek refer refine reflect reform
refuge refuse regal regard regret reign reject rejoice relate relief
relish rely remain remark remedy render renew repay repent reptile
republic rescue resent reside resign resist resolve respect respond
retire retreat reveal revenge revenue revere revise revive revolt rhyme
rhythm rib ribbon rice rid riddle ridge rifle rig rigid rim riot ripe
ripple rival roam roar roast rob robe robin robust rod rodent rogue
romance roof rooster rope rose rot rough rover rub ruby rude rug ruin
rumble rumor rust sack sacred sad saddle sage sail saint salad salmon
salon salt salute sand sane satisfy sauce sausage savage scar scarce
scare scarf scatter scent scheme scholar scoop scope scorch scorn scout
scrap scrape scratch scream screw scrub sculpt seal seam sect seek seem
seize seldom senior sense sentry sermon serpent servant settle seven
severe sew shabby shack shade shaft shallow shame shark sharp shatter
shave shear shed sheep sheet shelf shell shelter shepherd shield shine
shiver shock shoe shore shoulder shout shove shovel shred shrewd shriek
shrill shrimp shrine shrink shrub shrug shudder shuffle shun shy sick
siege sift sigh sight silk silly sin sincere sinew sink sip sir siren
sister sitcom six sketch ski skim skirt skull slab slam slant slap
slate slave sleek sleeve slender slice slick slim slip slogan slope
sloth slump sly smash smell smoke smooth smug snack snail snap snare
snarl sneak sneer sniff snore snort snug soak soap soar sob sober
soccer sock sofa soil sole solemn solid solo somber son sonic sore
sorrow sorry soul soup sour sow spare spark sparrow spatial spawn
spear spectrum sphere spice spider spike spill spine spiral spite
splash splendid sponge spoil spoke spoon spouse spray sprout spur spy
squad squash squat squeak squeal squeeze squirrel stab stable stadium
stale stalk stall stamp staple stare starve statue steady steak steal
steel steep steer stem stern stew stiff still sting stir stitch stomach
stone stool stoop storm stout stove straight strain strand strange
strap straw stray streak strength strict stride strife strip stripe
strive stroke stroll struggle strut stubborn stud stumble stump stun
sturdy subdue submarine subtle suburb succeed suck sudden suffer
sulfur sullen sultan summit summon superb supreme surge surplus
survive suspect sustain swallow swamp swan swap swarm sway swear sweat
sweep swell swift swing swirl sword syrup tactic tail tailor tale
talent tall tame tan tangle tar tart tassel tattoo taunt tavern teal
tease tedious temper tempo tempt tenant tend tender tense tent tenth
tepid territory terror testify texture thaw theft thick thief thigh
thin thirst thorn thorough thousand thrash thread threat thrift thrill
thrive throb throne throng throttle thrust thud thumb thump thunder
thus tick tide tidy tiger tilt timber timid tin tint tiny tire tissue
toad tobacco toe toll tomato tomb tomorrow tonight torch torment
tornado torrent torso toss tough tow towel tract tractor tragedy trail
trait tramp trap trash tray tread tremble trench trend tribe tribute
trifle trim trio triumph troll troop trophy trot trouble trout truce
trunk trust truth tug tulip tumble tuna tundra tune tunnel turf turkey
turtle tusk tutor twelve twenty twig twin twirl twist tycoon udder ugly
ulcer umbrella uncle undo unfold unify union unique unite unveil
upbeat uphold upper uproar upset urge usher usual utensil utter vacant
vacuum vague vain valley valor vanish vapor vast vault veil vein velvet
vendor vent venture venue verb verge verse vessel vest veto vex vibrant
vice victim victory vigil vigor villain vine vintage violet violin
virtue virus vital vivid vogue void volcano vow voyage vulgar wade
wag wager wagon waist wake wander ward ware warrior wary wasp waste
weary weave wedge weed weep weird whale wheat whim whip whirl whisk
whisper wholesale wicked widow wield wig wince winch wing wink wipe
wire wise wit witch wither witness wizard woe wolf wool worm worship
wound wrap wreck wrench wrestle wring wrinkle wrist yacht yawn yearn
yeast yell yield yolk zeal zinc
"""


def load_reference(words_path: Path) -> set[str]:
    return {
        w.strip().lower()
        for w in words_path.read_text().splitlines()
        if w.strip().isalpha() and w.strip().isascii()
    }


def inflections(lemma: str) -> list[str]:
    out = [lemma + "s", lemma + "es", lemma + "ed", lemma + "d",
           lemma + "ing", lemma + "er", lemma + "est", lemma + "r",
           lemma + "st", lemma + "ly"]
    if lemma.endswith("y") and len(lemma) > 2 and lemma[-2] not in "aeiou":
        stem = lemma[:-1]
        out += [stem + "ies", stem + "ied", stem + "ier", stem + "iest", stem + "ily"]
    if lemma.endswith("e"):
        out += [lemma[:-1] + "ing"]
    return out


def fixture_words() -> set[str]:
    words: set[str] = set()
    for name in ("method_stream.txt", "xml_values.txt"):
        for token in (FIXTURES / name).read_text().split():
            token = token.lower()
            if token.isalpha() and len(token) >= 2 and token not in JUNK:
                words.add(token)
    return words


def main() -> int:
    words_path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("/tmp/wl/package/words.txt")
    if not words_path.exists():
        print(f"reference word list not found: {words_path}", file=sys.stderr)
        return 1
    reference = load_reference(words_path)
    base = set(BASE_LEMMAS.split())
    entries = set(base) | fixture_words() | set(IRREGULAR_PLURALS.split())
    for lemma in base:
        for form in inflections(lemma):
            if form in reference:
                entries.add(form)
    entries -= JUNK
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(sorted(entries)) + "\n")
    print(f"wrote {len(entries)} entries to {OUT}")
    for probe in ("near", "center", "house", "bridge", "library", "child"):
        assert probe in entries, probe
    for probe in JUNK:
        assert probe not in entries, probe
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
