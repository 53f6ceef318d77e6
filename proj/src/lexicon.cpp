// Copyright 2026 The AssertConvert Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "assertconvert/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace assertconvert {

namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

int vowel_group_count(std::string_view word) {
    int groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    return groups;
}

// Base verbs plus explicit pasts where the rules would misfire (irregulars
// and stress-doubled forms like submit -> submitted). Same format as user
// lexicon files: one `verb[,past]` per line.
constexpr std::string_view kBuiltinVerbs = R"(
accept
access
achieve
acquire
act
adapt
add
adjust
admit,admitted
advance
advise
agree
allow
alter
analyze
announce
answer
appear
append
apply
approve
argue
arrange
arrive
ask
assemble
assert
assess
assign
associate
assume
assure
attach
attempt
authenticate
authorize
avoid
await
balance
base
be,was
bear,bore
beat,beat
become,became
begin,began
behave
believe
belong
bind,bound
bite,bit
block
blow,blew
boost
borrow
bounce
break,broke
breed,bred
bring,brought
broadcast,broadcast
browse
buffer
build,built
bump
burn
buy,bought
bypass
cache
calculate
call
cancel
capture
carry
cast,cast
catch,caught
cause
cease
change
charge
chase
check
choose,chose
chunk
claim
classify
clean
clear
climb
cling,clung
clone
close
coerce
collapse
collect
combine
come,came
comment
commit,committed
communicate
compare
compile
complain
complete
compose
compute
concat
conclude
conduct
configure
confirm
connect
consider
consist
construct
consult
consume
contain
continue
contribute
control,controlled
convert
cook
copy
correct
correspond
cost,cost
count
cover
crash
crawl
create
creep,crept
cross
cut,cut
deal,dealt
debug
decide
declare
decline
decode
decorate
decrease
decrement
decrypt
dedicate
deem
defer,deferred
define
delay
delegate
delete
deliver
demand
denote
deny
depend
deprecate
deploy
derive
descend
describe
deserve
design
desire
destroy
detach
detect
determine
die
differ
dig,dug
direct
disable
disagree
disappear
discard
disconnect
discover
discuss
dismiss
dispatch
display
dispose
distribute
divide
do,did
document
dominate
doubt
download
draft
drag
drain
draw,drew
dream
drink,drank
drive,drove
drop
dump
duplicate
dwell
earn
eat,ate
echo
edit
elect
eliminate
embed,embedded
embrace
emerge
emit,emitted
employ
empty
enable
enclose
encode
encounter
encourage
encrypt
end
enforce
engage
enhance
enjoy
enqueue
enrich
enroll
ensure
entail
enter
equal
erase
escape
establish
estimate
evaluate
evict
evolve
examine
exceed
exchange
exclude
execute
exist
exit
expand
expect
expire
explain
explore
export
expose
express
extend
extract
face
facilitate
factor
fade
fail
fall,fell
favor
feed,fed
feel,felt
fetch
fight,fought
figure
fill
filter
finalize
find,found
finish
fire
fix
flag
flatten
flee,fled
fling,flung
flip
flow
flush
fly,flew
focus
fold
follow
forbid,forbade
force
forget,forgot
forgive,forgave
fork
form
format,formatted
forward
free
freeze,froze
fulfill
gain
gather
generate
get,got
give,gave
go,went
govern
grant
grind,ground
group
grow,grew
guarantee
guard
guess
guide
handle
hang,hung
happen
has,had
hash
have,had
heal
hear,heard
help
hide,hid
highlight
hint
hire
hit,hit
hold,held
honor
hook
hope
host
identify
ignore
illustrate
imagine
imply
import
impose
improve
include
increase
increment
index
indicate
infer,inferred
inform
inherit
init
initialize
inject
input,input
inquire
insert
insist
inspect
install
instantiate
integrate
intend
interact
intercept
interpret
interrupt
introduce
invalidate
investigate
invoke
involve
is,was
isolate
issue
iterate
join
judge
jump
justify
keep,kept
kill
know,knew
label
lack
land
launch
lay,laid
lead,led
leak
lean
learn
leave,left
lend,lent
let,let
lift
light,lit
like
limit
link
list
listen
load
locate
lock
log
look
loop
lose,lost
lower
maintain
make,made
manage
manipulate
map
mark
match
matter
maximize
mean,meant
measure
meet,met
mention
merge
migrate
mind
minimize
miss
mistake,mistook
mix
mock
modify
monitor
mount
move
multiply
mutate
name
navigate
need
negotiate
nest
normalize
note
notice
notify
observe
obtain
occupy
occur,occurred
offer
omit,omitted
open
operate
oppose
optimize
order
organize
output,output
overcome,overcame
overlap,overlapped
overload
override,overrode
overwrite,overwrote
owe
own
pack
pad
parse
participate
pass
pause
pay,paid
peek
perceive
perform
permit,permitted
persist
persuade
pick
ping
place
plan
play
point
poll
pop
populate
position
possess
post
postpone
practice
precede
predict
prefer,preferred
prepare
prepend
present
preserve
prevent
print
proceed
process
produce
profile
promote
prompt
propagate
propose
protect
prove
provide
publish
pull
purge
pursue
push
put,put
qualify
query
queue
quit,quit
quote
raise
reach
react
read,read
realize
reason
rebuild,rebuilt
recall
receive
recognize
recommend
record
recover
recurse
recycle
redirect
redo,redid
reduce
refer,referred
refine
reflect
refresh
refuse
regard
register
reject
relate
relax
release
reload
rely
remain
remark
remember
remind
remove
rename
render
repair
repeat
replace
reply
report
represent
reproduce
request
require
rescue
research
resemble
reserve
reset,reset
reside
resist
resize
resolve
respond
rest
restart
restore
result
resume
retain
retrieve
retry
return
reuse
reveal
reverse
revert
review
revoke
ride,rode
ring,rang
rise,rose
risk
roll
rotate
round
route
run,ran
save
say,said
scale
scan
schedule
scroll
seal
search
see,saw
seed
seek,sought
seem
seize
select
sell,sold
send,sent
separate
serialize
serve
set,set
settle
shake,shook
shape
share
shed,shed
shift
shine,shone
ship
shoot,shot
shorten
shout
show,showed
shrink,shrank
shuffle
shut,shut
sign
signal
simplify
simulate
sing,sang
sink,sank
sit,sat
skim
skip
sleep,slept
slice
slide,slid
smooth
solve
sort
sound
spawn
speak,spoke
specify
speed
spell
spend,spent
spin,spun
split,split
spot
spread,spread
stabilize
stack
stamp
stand,stood
stare
start
stash
state
stay
steal,stole
step
stick,stuck
stop
store
stream
stretch
strike,struck
strip
struggle
stub
study
style
submit,submitted
subscribe
substitute
subtract
succeed
suffer
suggest
suit
summarize
supervise
supply
support
suppose
suppress
surround
survive
suspect
suspend
sustain
swap
swear,swore
sweep,swept
swim,swam
swing,swung
switch
sync
synchronize
tackle
tag
take,took
talk
target
teach,taught
tear,tore
tell,told
tend
terminate
test
thank
think,thought
throttle
throw,threw
toggle
tolerate
touch
trace
track
trade
train
transfer,transferred
transform
translate
transmit,transmitted
traverse
travel
treat
trigger
trim
truncate
trust
try
tune
turn
undergo,underwent
understand,understood
undertake,undertook
undo,undid
unfold
unify
uninstall
unite
unlock
unpack
unregister
unsubscribe
unveil
unwrap
update
upgrade
upload
upset,upset
urge
use
utilize
validate
vanish
vary
venture
verify
view
visit
vote
wait
wake,woke
walk
want
warn
wash
waste
watch
wave
wear,wore
weigh
welcome
win,won
wind,wound
wish
withdraw,withdrew
withhold,withheld
wonder
work
worry
wrap
write,wrote
yield
zip
)";

constexpr std::string_view kAdjectives[] = {
    "new", "old", "big", "small", "large", "empty", "full", "valid", "invalid",
    "active", "inactive", "current", "next", "previous", "last", "first",
    "final", "default", "custom", "main", "primary", "secondary", "remote",
    "local", "internal", "external", "public", "private", "global", "static",
    "good", "bad", "ready", "busy", "free", "safe", "unsafe", "raw", "plain",
    "simple", "complex", "dirty", "clean", "stale", "fresh", "hot", "cold",
    "warm", "fast", "slow", "high", "low", "maximum", "minimum", "single",
    "multiple", "unique", "duplicate", "temporary", "permanent", "partial",
    "complete", "initial", "latest", "early", "late", "long", "short", "deep",
    "shallow", "wide", "narrow", "dead", "live", "visible", "hidden",
    "enabled", "disabled", "actual", "expected", "pending", "failed",
    "successful", "correct", "wrong", "proper", "whole", "entire",
};

}  // namespace

const std::unordered_map<std::string, std::string>& irregular_past_forms() {
    static const std::unordered_map<std::string, std::string> forms = [] {
        std::unordered_map<std::string, std::string> map;
        std::istringstream lines{std::string(kBuiltinVerbs)};
        std::string line;
        while (std::getline(lines, line)) {
            auto comma = line.find(',');
            if (comma == std::string::npos) continue;
            map.emplace(line.substr(0, comma), line.substr(comma + 1));
        }
        return map;
    }();
    return forms;
}

std::string past_tense(std::string_view verb) {
    const auto& irregular = irregular_past_forms();
    if (auto it = irregular.find(std::string(verb)); it != irregular.end()) {
        return it->second;
    }
    std::string word(verb);
    if (word.empty()) return word;
    std::size_t n = word.size();
    if (word.back() == 'e') {
        return word + "d";
    }
    if (n >= 2 && word.back() == 'y' && !is_vowel(word[n - 2])) {
        return word.substr(0, n - 1) + "ied";
    }
    // single-syllable consonant-vowel-consonant: double the final consonant
    if (n >= 3 && vowel_group_count(word) == 1) {
        char a = word[n - 3], b = word[n - 2], c = word[n - 1];
        if (!is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y') {
            return word + c + "ed";
        }
    }
    return word + "ed";
}

void VerbLexicon::add_verb(std::string verb, std::string past) {
    if (verb.empty()) return;
    if (!past.empty()) irregular_.emplace(verb, past);
    verbs_.insert(std::move(verb));
}

void VerbLexicon::finalize() {
    past_forms_.clear();
    for (const std::string& verb : verbs_) {
        past_forms_.insert(past_of(verb));
    }
}

VerbLexicon VerbLexicon::from_text(std::string_view text) {
    VerbLexicon lexicon;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            lexicon.add_verb(line);
        } else {
            lexicon.add_verb(line.substr(0, comma), line.substr(comma + 1));
        }
    }
    for (std::string_view adj : kAdjectives) lexicon.adjectives_.emplace(adj);
    lexicon.finalize();
    return lexicon;
}

VerbLexicon VerbLexicon::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open lexicon file: " + path);
    }
    std::ostringstream content;
    content << in.rdbuf();
    return from_text(content.str());
}

const VerbLexicon& VerbLexicon::builtin() {
    static const VerbLexicon lexicon = from_text(kBuiltinVerbs);
    return lexicon;
}

bool VerbLexicon::is_verb(std::string_view word) const {
    return verbs_.count(std::string(word)) != 0;
}

bool VerbLexicon::is_verb_or_past(std::string_view word) const {
    std::string w(word);
    return verbs_.count(w) != 0 || past_forms_.count(w) != 0;
}

bool VerbLexicon::is_adjective(std::string_view word) const {
    return adjectives_.count(std::string(word)) != 0;
}

bool VerbLexicon::is_noun_like(std::string_view word) const {
    if (word.empty()) return false;
    if (is_verb_or_past(word) || is_adjective(word)) return false;
    // plural-looking words make bad sentence subjects ("credentials is ...")
    if (word.size() >= 2 && word.back() == 's' && word[word.size() - 2] != 's') return false;
    return true;
}

std::string VerbLexicon::past_of(std::string_view verb) const {
    if (auto it = irregular_.find(std::string(verb)); it != irregular_.end()) {
        return it->second;
    }
    return past_tense(verb);
}

}  // namespace assertconvert
