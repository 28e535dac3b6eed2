"""Static data for the bundled-corpus builder: the curated vocabulary with
target frequencies and style tags, and the planted repeated sequences.

Style tags: A / B lean toward the two Currier languages, x is neutral,
Z marks ring/label-flavored words for the astronomical pages.
"""

# (word, target count, style) -- counts for the eight pinned words are exact
# contract values; the rest set realistic relative frequencies and may be
# adjusted by the builder's demand solver.
BASE_VOCAB = [
    # daiin series, neutral-to-A
    ("daiin", 863, "x"), ("aiin", 469, "x"), ("dain", 211, "x"), ("ain", 89, "x"),
    ("daiiin", 17, "x"), ("aiiin", 41, "x"), ("dair", 106, "x"), ("air", 74, "x"),
    ("daiir", 23, "x"), ("aiir", 23, "x"), ("daim", 11, "x"), ("aim", 7, "x"),
    ("daiim", 5, "x"), ("dais", 4, "x"), ("daiis", 5, "x"), ("ais", 1, "x"),
    ("dail", 2, "x"), ("ail", 5, "x"), ("doiin", 19, "A"), ("oiin", 33, "A"),
    ("odaiin", 60, "A"), ("oaiin", 26, "A"), ("odain", 18, "A"), ("oain", 11, "A"),
    ("ydaiin", 21, "A"), ("ydain", 5, "A"), ("saiin", 144, "x"), ("sain", 68, "x"),
    ("soiin", 21, "A"), ("sair", 28, "x"), ("saiir", 6, "x"),
    ("oraiin", 38, "x"), ("orain", 27, "x"), ("osaiin", 8, "A"), ("raiin", 75, "x"),
    ("rain", 26, "x"), ("rair", 6, "x"), ("dan", 20, "A"), ("da", 9, "A"), ("an", 7, "x"),
    ("do", 16, "A"), ("dairal", 5, "A"), ("dariin", 3, "A"),
    # ch/sh + daiin
    ("chaiin", 45, "A"), ("chain", 18, "A"), ("choiin", 13, "A"),
    ("chodaiin", 44, "A"), ("chodain", 9, "A"), ("chokaiin", 17, "A"), ("chokain", 11, "A"),
    ("chotaiin", 9, "A"), ("chotain", 4, "A"), ("chedaiin", 32, "B"), ("chedain", 19, "B"),
    ("chekaiin", 8, "x"), ("chekain", 7, "x"), ("cheodaiin", 11, "A"), ("cheodain", 8, "A"),
    ("chdaiin", 16, "A"), ("chdain", 9, "A"), ("chkaiin", 18, "A"), ("chkain", 12, "A"),
    ("chtaiin", 4, "A"), ("chtain", 3, "A"), ("cthaiin", 13, "A"), ("cthain", 4, "A"),
    ("cphaiin", 7, "A"), ("ckhaiin", 3, "A"), ("dchaiin", 5, "A"),
    ("shaiin", 20, "A"), ("shain", 8, "A"), ("sheaiin", 9, "A"),
    ("shedaiin", 15, "B"), ("shedain", 11, "B"), ("shodaiin", 23, "A"), ("shodain", 5, "A"),
    ("shokaiin", 3, "A"), ("shkaiin", 4, "A"), ("shkain", 3, "A"), ("sheodaiin", 5, "A"),
    # qo/o + daiin (Currier-neutral, B-leaning for q-forms)
    ("qokain", 279, "B"), ("qokaiin", 262, "B"), ("qotain", 64, "B"), ("qotaiin", 79, "B"),
    ("qodain", 11, "x"), ("qodaiin", 42, "x"), ("qokair", 17, "B"), ("qotair", 6, "B"),
    ("qoain", 7, "x"), ("qoaiin", 23, "x"), ("okain", 144, "x"), ("okaiin", 212, "x"),
    ("otain", 96, "x"), ("otaiin", 154, "x"), ("opaiin", 13, "x"), ("ofaiin", 5, "x"),
    ("okoiin", 9, "A"), ("okair", 22, "x"), ("otair", 21, "x"), ("opair", 4, "x"),
    ("ykain", 10, "x"), ("ykaiin", 45, "x"), ("ytain", 13, "x"), ("ytaiin", 43, "x"),
    ("ykair", 8, "x"), ("kain", 48, "x"), ("kaiin", 65, "x"), ("tain", 16, "x"),
    ("taiin", 42, "x"), ("paiin", 8, "x"), ("kair", 14, "x"), ("tair", 13, "x"),
    ("araiin", 10, "x"), ("skaiin", 3, "A"),
    # l + daiin
    ("olaiin", 52, "B"), ("olain", 13, "B"), ("lkaiin", 49, "B"), ("lkain", 35, "B"),
    ("ldaiin", 3, "B"), ("laiin", 13, "B"), ("lain", 5, "B"), ("olkaiin", 31, "B"),
    ("olkain", 33, "B"), ("oldaiin", 9, "B"), ("alaiin", 4, "x"), ("alkain", 7, "x"),
    # ol series cores
    ("ol", 537, "x"), ("al", 260, "x"), ("dol", 117, "A"), ("dal", 253, "x"),
    ("or", 363, "x"), ("ar", 350, "x"), ("dor", 73, "A"), ("dar", 318, "x"),
    ("om", 22, "A"), ("am", 88, "x"), ("dom", 7, "A"), ("dam", 98, "x"),
    ("os", 29, "A"), ("as", 5, "x"), ("sol", 75, "A"), ("sal", 55, "A"),
    ("sor", 57, "A"), ("sar", 84, "A"), ("sam", 10, "A"), ("dl", 20, "A"),
    # ch/sh + ol
    ("chol", 396, "A"), ("cheol", 172, "A"), ("cheeol", 9, "A"), ("chor", 219, "A"),
    ("cheor", 100, "A"), ("cheeor", 14, "A"), ("chos", 38, "A"), ("cheos", 33, "A"),
    ("chom", 15, "A"), ("cheom", 10, "A"), ("dchor", 24, "A"), ("dchol", 26, "A"),
    ("dcheol", 8, "A"), ("kchor", 20, "A"), ("kchol", 21, "A"), ("kcheol", 5, "A"),
    ("tchor", 19, "A"), ("tchol", 13, "A"), ("tcheol", 6, "A"), ("pchor", 12, "A"),
    ("pchol", 8, "A"), ("pcheol", 11, "A"), ("fchor", 3, "A"), ("fchol", 3, "A"),
    ("ochor", 6, "A"), ("ochol", 5, "A"), ("ychor", 16, "A"), ("ychol", 12, "A"),
    ("ycheol", 14, "A"), ("ycheor", 9, "A"), ("chdar", 20, "A"), ("chedar", 30, "B"),
    ("chdal", 18, "A"), ("chedal", 24, "B"), ("chkar", 12, "x"), ("chekar", 8, "x"),
    ("chkal", 13, "x"), ("chekal", 12, "x"), ("chtar", 3, "x"), ("chetar", 6, "x"),
    ("chtal", 6, "x"), ("chetal", 1, "x"), ("chdam", 10, "A"), ("chedam", 6, "B"),
    ("chdor", 8, "A"), ("chdol", 2, "A"), ("chedol", 6, "B"), ("chodar", 14, "A"),
    ("chodal", 7, "A"), ("chokar", 7, "A"), ("chokal", 9, "A"), ("chotar", 11, "A"),
    ("chotal", 9, "A"), ("chokol", 4, "A"), ("chotol", 7, "A"), ("cho", 68, "A"),
    ("cheo", 65, "A"), ("cheeo", 16, "A"), ("chl", 26, "A"), ("chr", 9, "A"),
    ("chs", 18, "A"), ("ches", 36, "A"), ("chees", 33, "A"),
    ("otchor", 17, "A"), ("otchol", 28, "A"), ("okchor", 20, "A"), ("okchol", 14, "A"),
    ("opchor", 6, "A"), ("opchol", 6, "A"), ("opcheol", 7, "A"), ("ytchor", 13, "A"),
    ("ytchol", 6, "A"), ("ykchor", 5, "A"), ("ykchol", 6, "A"), ("qotchor", 14, "A"),
    ("qotchol", 13, "A"), ("qokchor", 11, "A"), ("qokchol", 17, "A"), ("qopchol", 6, "A"),
    ("qotcho", 11, "A"), ("qokcho", 10, "A"), ("schol", 5, "A"), ("scheol", 2, "A"),
    ("shol", 186, "A"), ("sheol", 114, "A"), ("sheeol", 14, "A"), ("shor", 97, "A"),
    ("sheor", 51, "A"), ("sheeor", 9, "A"), ("shos", 10, "A"), ("sheos", 17, "A"),
    ("shom", 4, "A"), ("dshor", 14, "A"), ("dshol", 5, "A"), ("dsheol", 9, "A"),
    ("kshor", 2, "A"), ("kshol", 3, "A"), ("ksho", 8, "A"), ("tshol", 6, "A"),
    ("tsho", 5, "A"), ("pshol", 5, "A"), ("oshol", 1, "A"), ("yshor", 2, "A"),
    ("shdar", 9, "A"), ("shedar", 7, "B"), ("shdal", 4, "A"), ("shedal", 11, "B"),
    ("shkar", 2, "A"), ("shekar", 2, "A"), ("shekal", 4, "A"), ("shokal", 4, "A"),
    ("sho", 130, "A"), ("sheo", 47, "A"), ("shes", 13, "A"), ("shees", 9, "A"),
    ("sh", 15, "A"), ("she", 25, "A"), ("shee", 13, "A"), ("sheody", 50, "A"),
    # ch/sh + al
    ("chal", 48, "A"), ("cheal", 30, "A"), ("char", 72, "A"), ("chear", 51, "A"),
    ("cham", 20, "A"), ("cheam", 5, "A"), ("chan", 11, "A"), ("chean", 2, "A"),
    ("shar", 34, "A"), ("shear", 21, "A"), ("shal", 15, "A"), ("sheal", 19, "A"),
    ("sham", 7, "A"), ("shan", 5, "A"), ("kshar", 4, "A"), ("dchar", 4, "A"),
    ("dchal", 2, "A"), ("kchar", 2, "A"), ("tchar", 4, "A"), ("pchar", 3, "A"),
    # cth family
    ("cthol", 60, "A"), ("cthor", 45, "A"), ("cthom", 9, "A"), ("ctho", 15, "A"),
    ("ckhol", 22, "A"), ("ckhor", 9, "A"), ("cphol", 15, "A"), ("cphor", 6, "A"),
    ("cfhol", 6, "A"), ("ctheol", 10, "A"), ("ckheol", 7, "A"), ("cpheol", 3, "A"),
    ("cthal", 7, "A"), ("cthar", 20, "A"), ("ckhal", 4, "A"), ("ckhar", 3, "A"),
    ("cthy", 111, "A"), ("ckhy", 39, "A"), ("cphy", 16, "A"), ("cfhy", 6, "A"),
    ("cthey", 50, "A"), ("ckhey", 131, "A"), ("cphey", 6, "A"),
    ("cthody", 18, "A"), ("ckhody", 4, "A"), ("ctheody", 6, "A"), ("ckheody", 5, "A"),
    # qo/o + ol
    ("qol", 151, "B"), ("qo", 29, "x"), ("qoly", 7, "B"), ("qor", 22, "B"),
    ("qokol", 104, "B"), ("qokeol", 52, "B"), ("qokeeol", 11, "B"), ("qokeeo", 23, "B"),
    ("qotol", 47, "B"), ("qoteol", 12, "B"), ("qokor", 36, "B"), ("qokeor", 21, "B"),
    ("qotor", 29, "B"), ("qoteor", 5, "B"), ("qopol", 6, "B"), ("qopor", 4, "B"),
    ("qockhol", 7, "A"), ("qockheol", 3, "A"), ("qocthol", 2, "A"),
    ("okol", 82, "x"), ("okeol", 66, "x"), ("okeeol", 18, "x"), ("okor", 34, "x"),
    ("okeor", 22, "x"), ("okeeor", 14, "x"), ("otol", 86, "x"), ("oteol", 42, "x"),
    ("oteeol", 9, "x"), ("otor", 46, "x"), ("oteor", 12, "x"), ("opol", 4, "x"),
    ("opor", 8, "x"), ("ofor", 2, "x"), ("ykor", 10, "x"), ("ykol", 14, "x"),
    ("ykeol", 14, "x"), ("ytor", 14, "x"), ("ytol", 12, "x"), ("yteol", 6, "x"),
    ("kol", 37, "x"), ("keol", 20, "x"), ("keeol", 13, "x"), ("kor", 26, "x"),
    ("keor", 10, "x"), ("tol", 48, "x"), ("teol", 15, "x"), ("tor", 23, "x"),
    ("pol", 24, "x"), ("por", 8, "x"), ("fol", 3, "x"), ("odor", 8, "A"),
    ("okom", 7, "x"), ("okeom", 6, "x"), ("otom", 1, "x"),
    # qo/o + al
    ("qokal", 191, "B"), ("qokar", 152, "B"), ("qotal", 59, "B"), ("qotar", 63, "B"),
    ("qopal", 2, "B"), ("qopar", 5, "B"), ("okal", 138, "x"), ("okar", 129, "x"),
    ("otal", 143, "x"), ("otar", 141, "x"), ("opal", 9, "x"), ("opar", 10, "x"),
    ("ofal", 4, "x"), ("ofar", 4, "x"), ("opam", 4, "x"), ("ykal", 16, "x"),
    ("ytal", 19, "x"), ("ykar", 36, "x"), ("ytar", 26, "x"), ("ypal", 2, "x"),
    ("kal", 23, "x"), ("kar", 52, "x"), ("tal", 20, "x"), ("tar", 43, "x"),
    ("pal", 2, "x"), ("par", 5, "x"), ("far", 3, "x"), ("qokam", 25, "B"),
    ("okam", 26, "x"), ("ykam", 5, "x"), ("qotam", 12, "B"), ("otam", 47, "x"),
    ("ytam", 13, "x"), ("qokan", 8, "B"), ("okan", 5, "x"), ("qodal", 7, "x"),
    ("odal", 13, "x"), ("ydal", 3, "x"), ("sodal", 5, "A"), ("qodar", 11, "x"),
    ("odar", 24, "x"), ("ydar", 2, "x"), ("sodar", 6, "A"), ("qodam", 3, "x"),
    ("odam", 6, "x"), ("kam", 9, "x"), ("olkam", 9, "B"), ("lkam", 7, "B"),
    ("alkam", 6, "x"), ("tam", 5, "x"), ("qoar", 12, "x"), ("qoor", 8, "x"),
    ("oar", 16, "x"), ("oor", 3, "x"),
    ("qotedar", 3, "B"), ("otedar", 11, "B"), ("ytedar", 3, "B"), ("qotedal", 3, "B"),
    ("otedal", 4, "B"), ("qokedar", 8, "B"), ("okedar", 6, "B"), ("qokedal", 3, "B"),
    ("okedal", 7, "B"), ("qoteedar", 3, "B"), ("oteedar", 3, "B"), ("qokeedar", 6, "B"),
    ("okeedar", 2, "B"), ("qokeedal", 3, "B"), ("okeedal", 3, "B"), ("kedar", 3, "B"),
    ("tedar", 1, "B"), ("kedal", 1, "B"), ("tedal", 1, "B"),
    ("okalal", 6, "Z"), ("okalar", 6, "Z"), ("okaral", 5, "Z"), ("otalal", 3, "Z"),
    ("otalar", 3, "Z"), ("otaral", 3, "Z"), ("otarar", 5, "Z"), ("otalam", 3, "Z"),
    ("otaram", 4, "Z"), ("okalam", 2, "Z"), ("okaram", 3, "Z"), ("okalol", 3, "Z"),
    ("okalor", 3, "Z"), ("otalor", 4, "Z"),
    # l + ol/al
    ("lol", 44, "B"), ("olol", 18, "B"), ("alol", 9, "B"), ("dalol", 7, "B"),
    ("lor", 43, "B"), ("olor", 31, "B"), ("alor", 7, "B"), ("dalor", 8, "B"),
    ("rol", 20, "B"), ("orol", 15, "B"), ("arol", 12, "B"), ("ror", 17, "B"),
    ("oror", 5, "B"), ("aror", 6, "B"), ("rom", 4, "B"), ("orom", 5, "B"),
    ("lom", 5, "B"), ("olom", 3, "B"), ("alom", 6, "B"), ("oly", 57, "B"),
    ("aly", 29, "B"), ("doly", 3, "B"), ("daly", 30, "B"), ("ly", 14, "B"),
    ("ory", 17, "B"), ("ary", 26, "B"), ("dory", 4, "B"), ("dary", 24, "B"),
    ("ry", 13, "B"), ("lo", 15, "B"), ("ro", 10, "B"), ("loly", 7, "B"),
    ("lkol", 5, "B"), ("olkol", 5, "B"), ("lkor", 4, "B"), ("olkor", 4, "B"),
    ("lkeol", 5, "B"), ("olkeol", 7, "B"), ("soly", 3, "A"), ("sory", 5, "A"),
    ("saly", 5, "A"), ("sary", 8, "A"), ("lr", 12, "B"), ("ls", 10, "B"),
    ("ols", 18, "B"), ("als", 4, "B"), ("dals", 6, "B"),
    ("lchor", 6, "A"), ("lcheor", 2, "A"), ("lchol", 4, "A"), ("lcheol", 8, "A"),
    ("olchor", 3, "A"), ("olcheol", 7, "A"), ("olsheol", 4, "A"),
    ("rar", 21, "B"), ("orar", 7, "B"), ("arar", 7, "B"), ("ral", 17, "B"),
    ("oral", 10, "B"), ("aral", 16, "B"), ("lar", 6, "B"), ("alar", 6, "B"),
    ("dalar", 5, "B"), ("lal", 7, "B"), ("olal", 7, "B"), ("alal", 5, "B"),
    ("dalal", 5, "B"), ("ram", 14, "B"), ("oram", 10, "B"), ("aram", 12, "B"),
    ("daram", 7, "B"), ("lam", 6, "B"), ("olam", 6, "B"), ("alam", 8, "B"),
    ("dalam", 7, "B"), ("saral", 6, "A"), ("sarol", 4, "A"), ("lkar", 30, "B"),
    ("olkar", 19, "B"), ("alkar", 4, "B"), ("lkal", 5, "B"), ("olkal", 11, "B"),
    ("alkal", 11, "B"), ("ldar", 5, "B"), ("oldar", 6, "B"), ("oldal", 3, "B"),
    ("oldam", 6, "B"), ("lchal", 6, "A"), ("lchar", 3, "A"),
    # chedy series
    ("chedy", 501, "B"), ("cheedy", 59, "B"), ("shedy", 426, "B"), ("sheedy", 84, "B"),
    ("chey", 344, "x"), ("cheey", 174, "x"), ("shey", 283, "x"), ("sheey", 144, "x"),
    ("chy", 155, "x"), ("chdy", 150, "x"), ("shy", 104, "x"), ("shdy", 46, "x"),
    ("chody", 94, "x"), ("choy", 13, "A"), ("shody", 55, "A"), ("sody", 5, "A"),
    ("choly", 15, "A"), ("chaly", 5, "A"), ("sholy", 4, "A"), ("chory", 12, "A"),
    ("chary", 6, "A"), ("shory", 6, "A"), ("cheody", 89, "A"), ("cheoy", 4, "A"),
    ("cheoly", 5, "A"), ("sheoly", 1, "A"), ("cheky", 65, "x"), ("cheeky", 24, "x"),
    ("sheky", 36, "x"), ("sheeky", 14, "x"), ("chety", 25, "x"), ("cheety", 25, "x"),
    ("shety", 9, "x"), ("sheety", 8, "x"), ("chepy", 7, "x"), ("shepy", 1, "x"),
    ("dchy", 30, "x"), ("dchdy", 8, "x"), ("dshy", 8, "x"), ("ched", 23, "B"),
    ("cheed", 2, "B"), ("shed", 18, "B"), ("sheed", 6, "B"), ("chod", 9, "A"),
    ("cheod", 5, "A"), ("shod", 11, "A"), ("sheod", 11, "A"), ("chok", 5, "A"),
    ("cheok", 2, "A"), ("shok", 5, "A"), ("chot", 4, "A"), ("cheot", 1, "A"),
    ("shek", 11, "A"), ("choldy", 10, "A"), ("cheoldy", 5, "A"), ("sholdy", 8, "A"),
    ("ychey", 17, "x"), ("ycheey", 24, "x"), ("yshey", 12, "x"), ("ysheey", 10, "x"),
    ("ochey", 8, "x"), ("oshey", 7, "x"), ("ychedy", 13, "B"), ("ycheedy", 7, "B"),
    ("yshedy", 10, "B"), ("ysheedy", 6, "B"), ("ychy", 4, "x"), ("ochy", 5, "x"),
    ("dchey", 18, "x"), ("dcheey", 13, "x"), ("dshey", 14, "x"), ("dsheey", 8, "x"),
    ("dchedy", 26, "B"), ("dcheedy", 4, "B"), ("dshedy", 36, "B"), ("dsheedy", 4, "B"),
    ("chekchy", 5, "A"), ("chokchy", 16, "A"), ("shekchy", 5, "A"), ("shokchy", 9, "A"),
    ("chetchy", 4, "A"), ("chotchy", 12, "A"), ("chopchy", 5, "A"), ("shopchy", 2, "A"),
    ("chofchy", 2, "A"), ("chochy", 4, "A"),
    # ch + pedestal + y
    ("chckhy", 140, "A"), ("chckhdy", 13, "A"), ("chckhedy", 11, "B"), ("ckhedy", 4, "B"),
    ("chcthy", 79, "A"), ("chcthdy", 7, "A"), ("chcthedy", 7, "B"), ("cthedy", 10, "B"),
    ("chcphy", 11, "A"), ("chcphedy", 3, "B"), ("cphedy", 8, "B"), ("chcfhy", 2, "A"),
    ("shckhy", 60, "A"), ("shckhedy", 6, "B"), ("shcthy", 31, "A"), ("shcthedy", 1, "B"),
    ("ckheey", 11, "A"), ("ctheey", 13, "A"), ("qockhey", 18, "A"), ("qocthey", 5, "A"),
    ("qockhy", 19, "A"), ("qocthy", 7, "A"), ("ockhey", 7, "A"), ("octhey", 6, "A"),
    ("chockhey", 5, "A"), ("chocthey", 6, "A"), ("ockhy", 13, "A"), ("octhy", 10, "A"),
    ("checkhy", 47, "A"), ("chckhey", 30, "A"), ("chockhy", 21, "A"), ("checkhey", 10, "A"),
    ("checthy", 28, "A"), ("chcthey", 7, "A"), ("chocthy", 18, "A"), ("sheckhy", 35, "A"),
    ("shckhey", 12, "A"), ("shockhy", 5, "A"), ("shecthy", 20, "A"), ("shocthy", 12, "A"),
    ("cthdy", 8, "A"), ("ckhdy", 4, "A"),
    # qo + chedy block
    ("qokeedy", 305, "B"), ("qokedy", 272, "B"), ("qokeeedy", 5, "B"),
    ("qoteedy", 74, "B"), ("qotedy", 91, "B"), ("qokeed", 15, "B"), ("qoked", 7, "B"),
    ("qoteed", 3, "B"), ("qoted", 4, "B"), ("oked", 2, "B"), ("oteed", 8, "B"),
    ("okeedy", 105, "B"), ("okedy", 118, "B"), ("okeeedy", 9, "B"),
    ("oteedy", 100, "B"), ("otedy", 155, "B"), ("keedy", 53, "B"), ("kedy", 44, "B"),
    ("teedy", 13, "B"), ("tedy", 42, "B"), ("chokedy", 3, "B"), ("chkedy", 5, "B"),
    ("chekedy", 4, "B"), ("chetedy", 3, "B"), ("eedy", 6, "B"), ("deedy", 7, "B"),
    ("ykeedy", 30, "B"), ("ykedy", 23, "B"), ("yteedy", 28, "B"), ("ytedy", 24, "B"),
    ("qokeey", 308, "B"), ("qokey", 107, "B"), ("qoky", 147, "B"),
    ("qoteey", 42, "B"), ("qotey", 24, "B"), ("qoteeey", 4, "B"),
    ("qokeody", 32, "x"), ("qokody", 9, "x"), ("qoteody", 12, "x"), ("qotody", 11, "x"),
    ("qokeod", 8, "x"), ("qokod", 7, "x"), ("qoeedy", 15, "B"), ("qochey", 6, "A"),
    ("okeody", 37, "Z"), ("okody", 16, "Z"), ("oteody", 39, "Z"), ("otody", 14, "Z"),
    ("ykeody", 16, "Z"), ("ykody", 2, "Z"), ("yteody", 14, "Z"), ("ytody", 9, "Z"),
    ("keody", 21, "Z"), ("kody", 7, "Z"), ("teody", 8, "Z"), ("tody", 8, "Z"),
    ("okeey", 177, "B"), ("okey", 63, "B"), ("oky", 27, "Z"), ("oteey", 140, "B"),
    ("otey", 57, "B"), ("oty", 8, "Z"), ("key", 44, "x"), ("keey", 14, "x"),
    ("teey", 20, "x"), ("tey", 11, "x"), ("ykeey", 58, "B"), ("ykey", 8, "B"),
    ("yteey", 28, "B"), ("ytey", 13, "B"), ("okeo", 14, "Z"), ("oteo", 13, "Z"),
    ("keo", 4, "Z"), ("teo", 2, "Z"), ("chokeedy", 11, "B"), ("chokey", 7, "B"),
    ("choteedy", 7, "B"), ("chotey", 9, "B"), ("chekeedy", 6, "B"), ("chekey", 7, "B"),
    ("cheteedy", 3, "B"), ("chetey", 5, "B"), ("shokeedy", 3, "B"), ("shokey", 5, "B"),
    ("shekeedy", 6, "B"), ("shekey", 5, "B"), ("cheekey", 6, "B"), ("sheekey", 1, "B"),
    ("cheokey", 3, "B"), ("sheokey", 4, "B"), ("chkeedy", 13, "B"), ("chkey", 8, "B"),
    ("chteedy", 3, "B"), ("chtey", 1, "B"),
    # single-unit words
    ("s", 240, "x"), ("y", 150, "x"), ("o", 95, "x"), ("r", 80, "x"),
    ("d", 55, "x"), ("l", 60, "x"), ("k", 8, "x"), ("t", 10, "x"),
    # frequent two-unit bits
    ("dy", 270, "B"), ("ody", 40, "x"), ("ydy", 6, "x"), ("oy", 12, "x"),
]

# The 35 repeated three-word sequences (5 uniform), with per-order placement
# counts mirroring the published census shape.  Each entry:
# (members, [(order tuple, count), ...], uniform?)
TRIPLE_SEQUENCES = [
    # uniform order
    (("ol", "shedy", "qokedy"), [(("ol", "shedy", "qokedy"), 5)], True),
    (("chey", "qol", "chedy"), [(("chey", "qol", "chedy"), 4)], True),
    (("ol", "s", "aiin"), [(("ol", "s", "aiin"), 4)], True),
    (("r", "ol", "dain"), [(("r", "ol", "dain"), 3)], True),
    (("shedy", "qokedy", "shedy"), [(("shedy", "qokedy", "shedy"), 3)], True),
    # changed order
    (("shedy", "qokedy", "qokeedy"),
     [(("shedy", "qokedy", "qokeedy"), 3), (("shedy", "qokeedy", "qokedy"), 2),
      (("qokeedy", "qokedy", "shedy"), 1), (("qokedy", "shedy", "qokeedy"), 1)], False),
    (("ol", "chedy", "qokain"),
     [(("ol", "chedy", "qokain"), 3), (("qokain", "ol", "chedy"), 2),
      (("chedy", "qokain", "ol"), 1)], False),
    (("ol", "qokar", "shedy"),
     [(("ol", "qokar", "shedy"), 2), (("shedy", "qokar", "ol"), 1),
      (("qokar", "ol", "shedy"), 1), (("ol", "shedy", "qokar"), 1)], False),
    (("or", "aiin", "ol"),
     [(("or", "aiin", "ol"), 3), (("aiin", "or", "ol"), 1), (("or", "ol", "aiin"), 1)], False),
    (("sheedy", "qokedy", "chedy"),
     [(("sheedy", "qokedy", "chedy"), 3), (("qokedy", "sheedy", "chedy"), 1)], False),
    (("or", "or", "aiin"),
     [(("or", "or", "aiin"), 3), (("or", "aiin", "or"), 1)], False),
    (("chedy", "qokeey", "qokeey"),
     [(("chedy", "qokeey", "qokeey"), 2), (("qokeey", "qokeey", "chedy"), 1),
      (("qokeey", "chedy", "qokeey"), 1)], False),
    (("shedy", "qokaiin", "chedy"),
     [(("shedy", "qokaiin", "chedy"), 2), (("chedy", "qokaiin", "shedy"), 1),
      (("qokaiin", "shedy", "chedy"), 1)], False),
    (("chol", "daiin", "cthy"),
     [(("chol", "daiin", "cthy"), 2), (("daiin", "chol", "cthy"), 1)], False),
    (("chol", "chol", "daiin"),
     [(("chol", "chol", "daiin"), 2), (("chol", "daiin", "chol"), 1)], False),
    (("cthor", "chol", "chor"),
     [(("cthor", "chol", "chor"), 2), (("chol", "chor", "cthor"), 1)], False),
    (("daiin", "daiin", "dal"),
     [(("daiin", "daiin", "dal"), 2), (("daiin", "dal", "daiin"), 1)], False),
    (("qokar", "shedy", "shedy"),
     [(("qokar", "shedy", "shedy"), 2), (("shedy", "qokar", "shedy"), 1)], False),
    (("qokedy", "qokeey", "chedy"),
     [(("qokedy", "qokeey", "chedy"), 1), (("qokeey", "qokedy", "chedy"), 1),
      (("qokedy", "chedy", "qokeey"), 1)], False),
    (("qokedy", "qokeedy", "qokedy"),
     [(("qokedy", "qokeedy", "qokedy"), 2), (("qokeedy", "qokedy", "qokedy"), 1)], False),
    (("qokedy", "qokeedy", "qokeedy"),
     [(("qokedy", "qokeedy", "qokeedy"), 2), (("qokeedy", "qokeedy", "qokedy"), 1)], False),
    (("qokeey", "qokeedy", "qokeey"),
     [(("qokeey", "qokeedy", "qokeey"), 2), (("qokeey", "qokeey", "qokeedy"), 1)], False),
    (("qokal", "shedy", "qokedy"),
     [(("qokal", "shedy", "qokedy"), 2), (("shedy", "qokedy", "qokal"), 1)], False),
    (("qokal", "chedy", "qokaiin"),
     [(("qokal", "chedy", "qokaiin"), 2), (("qokaiin", "chedy", "qokal"), 1)], False),
    (("qol", "cheey", "chey"),
     [(("qol", "cheey", "chey"), 2), (("cheey", "qol", "chey"), 1)], False),
    (("shedy", "ol", "shedy"),
     [(("shedy", "ol", "shedy"), 2), (("shedy", "shedy", "ol"), 1)], False),
    (("shedy", "qokain", "shey"),
     [(("shedy", "qokain", "shey"), 2), (("shey", "qokain", "shedy"), 1)], False),
    (("shey", "qokar", "shedy"),
     [(("shey", "qokar", "shedy"), 2), (("qokar", "shedy", "shey"), 1)], False),
    (("ol", "chedy", "qol"),
     [(("ol", "chedy", "qol"), 2), (("chedy", "qol", "ol"), 1)], False),
    (("or", "aiin", "otar"),
     [(("or", "aiin", "otar"), 2), (("otar", "or", "aiin"), 1)], False),
    (("dar", "ar", "al"),
     [(("dar", "ar", "al"), 2), (("al", "dar", "ar"), 1)], False),
    (("cheey", "chey", "qokeey"),
     [(("cheey", "chey", "qokeey"), 2), (("cheey", "qokeey", "chey"), 1)], False),
    (("shedy", "qokal", "chedy"),
     [(("shedy", "qokal", "chedy"), 1), (("chedy", "qokal", "shedy"), 1),
      (("shedy", "chedy", "qokal"), 1)], False),
    (("chol", "cthol", "shol"),
     [(("chol", "cthol", "shol"), 1), (("chol", "shol", "cthol"), 1),
      (("cthol", "chol", "shol"), 1)], False),
    (("chol", "s", "cheol"),
     [(("chol", "s", "cheol"), 1), (("cheol", "chol", "s"), 1),
      (("s", "cheol", "chol"), 1)], False),
]

# Words serving as the rare-word evidence samples (not contiguous parts of
# any other corpus word; the builder asserts this).
SEVEN_WORDS = [
    "oteodar", "cholkaiin", "qotchodaiin", "shedaiirol", "opchedaiin",
    "dcheockhy", "soshecthy", "rokalaiin", "ypchocthor", "dolchesor",
    "otchodaly", "shetchoror", "qofchoraiin", "lfcheodaiin", "salchedaiin",
    "ofsheockhor", "dacthaiin", "ysairol", "qopchxar", "otshedaiils",
]
EIGHT_WORDS = [
    "qokedaiiral", "chollam", "tcheodaiin", "sopchsor", "ofchedaiily",
    "choldaraiin", "qotcheolkar", "dshedykaiin", "rfchocthy",
]
