"""Dickey-Fuller tau quantile surface (generated by scripts/gen_unit_root_cv.py).

Monte-Carlo calibrated; largest-T row verified against published asymptotic
critical values at generation time. Do not edit by hand.
"""

PROBS = (0.001, 0.005, 0.01, 0.02, 0.025, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1, 0.125, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.975, 0.99, 0.999)

T_GRID = (25, 50, 100, 150, 200, 250, 300, 400, 500, 750, 1000, 1500, 2500)

TABLE = {
    'none': (
        (-3.522180170483273, -2.9170381643508656, -2.6607468420401363, -2.3733952463178105, -2.281071424544944, -2.201191226344554, -2.063894726554476, -1.9613353615805762, -1.870600712106025, -1.7935118226124682, -1.725798378007093, -1.66404332202267, -1.60926457172309, -1.4889727024055257, -1.385619677590975, -1.214040414547664, -1.0688204265614893, -0.940603685298762, -0.7067800097314348, -0.47153552316938874, -0.20851825613479072, 0.0831512685274389, 0.43243258663484396, 0.9259775414679217, 1.3387718817715044, 1.705055506535716, 2.1366688825996505, 3.1235131726040604),
        (-3.3748879209532845, -2.8676292380890986, -2.6095860055798217, -2.336961764853585, -2.2442866986406864, -2.16760966927835, -2.044107869340367, -1.9470944002154937, -1.8608330891892, -1.7880284211944852, -1.7222872243471612, -1.6657784975644334, -1.614361034684786, -1.4949662184325596, -1.3930990241990266, -1.2224595243504717, -1.078767166149333, -0.9510385616858611, -0.7193425927345385, -0.4883163440441831, -0.22917243515774932, 0.06544767569707644, 0.41416470571822084, 0.9071365816086062, 1.304983955092778, 1.652846656243983, 2.0675733747189247, 2.946945297579963),
        (-3.35573210837482, -2.832725398543999, -2.585875545786615, -2.323970780564024, -2.2354892648523155, -2.1606649959485553, -2.0446932376335663, -1.9454089097899088, -1.8646305250230217, -1.7917766093821696, -1.7277388312960917, -1.667924994143065, -1.614312203725411, -1.5005778817690172, -1.400692652074071, -1.2326141727173503, -1.0887662184984852, -0.9629941337401999, -0.7285352330991167, -0.49397948406792436, -0.23497220701531515, 0.059546214726400246, 0.4106825566363393, 0.8993254902957035, 1.2988412447955031, 1.6450676943167915, 2.0564162435743825, 2.855919422134825),
        (-3.3118904455685434, -2.8138349058003294, -2.5859604041932083, -2.320900212892021, -2.2304290023592297, -2.1565026360555164, -2.036815900376031, -1.9426395271421297, -1.857667560316147, -1.7829018852441199, -1.7185244200469767, -1.6603858814607926, -1.6094152354049178, -1.4930104409479694, -1.3931157918653743, -1.2266150287403623, -1.0839683160161846, -0.9584384271007363, -0.7263128024162867, -0.49429141355126605, -0.23418266296169737, 0.05935927744004392, 0.40409046768868934, 0.8887116681149092, 1.2810147485779657, 1.623249304450362, 2.0241388596575574, 2.8850452685549555),
        (-3.3157296977155615, -2.8013950196250845, -2.5670372463730713, -2.3173448182926544, -2.235179634005685, -2.160392634251662, -2.038710985747818, -1.9410879335757698, -1.8601200348555254, -1.7898422952171318, -1.725518768785862, -1.6676563282855585, -1.6138462006739822, -1.4982494107901732, -1.3987855164654386, -1.230391074319599, -1.0883663685889935, -0.9593715756223342, -0.7295857249930522, -0.496252608475966, -0.23536448997336923, 0.06080280089784261, 0.41215392617270236, 0.895028373949483, 1.2934600061307624, 1.6377885821987304, 2.023801498892452, 2.8325709753341872),
        (-3.252141818753698, -2.7836747312485337, -2.558134527414678, -2.3087339535451052, -2.225691208666165, -2.150394592455225, -2.031327268014849, -1.9382125790176346, -1.85661327947777, -1.7852436190504102, -1.720708264837734, -1.6647247321539234, -1.6116779001593677, -1.496181443901755, -1.3986093011383562, -1.229741660769642, -1.0884066741680536, -0.9605238632278496, -0.7262939992077811, -0.4946073402168637, -0.23249435977657273, 0.05951621003188872, 0.4092253679778811, 0.89197650394259, 1.2868543883979355, 1.6295931042068599, 2.0278419316850997, 2.848094492341686),
        (-3.3057240179161558, -2.8133660787670474, -2.5754736199069344, -2.321740377808965, -2.230636482451656, -2.1573582785993106, -2.0337240365606384, -1.9368694848640702, -1.854535785631374, -1.7846121587627763, -1.723363214822626, -1.6634019433441114, -1.6105726745447826, -1.496392811652469, -1.3996640130306701, -1.231680901743136, -1.0909709222992112, -0.963580548615067, -0.7326127637269174, -0.5028679970278153, -0.2428375025358962, 0.05517329668043606, 0.39978385511893827, 0.8884630789409013, 1.287371070759901, 1.6259386998535346, 2.02645833480523, 2.8227239561188338),
        (-3.2806555945552884, -2.7905964097433325, -2.5619470090125596, -2.3175294434813614, -2.231836435527701, -2.1579785892422674, -2.036106967022552, -1.9375857161663115, -1.8571143664947969, -1.7862908271712352, -1.724882879571688, -1.6658606147734716, -1.613126867736416, -1.496217757354394, -1.3997309269413498, -1.2300878920726888, -1.0862304646999013, -0.9605979098136846, -0.7272156370362012, -0.4967520736034682, -0.23741925607032147, 0.054712721614497827, 0.4027768591576754, 0.8870354942797315, 1.2878141126360043, 1.630711402986806, 2.028559744161374, 2.831861542252471),
        (-3.2850431449847353, -2.8203814338324498, -2.5776878066769005, -2.3269415211206317, -2.239459374169563, -2.1631135556477084, -2.042578729112368, -1.9435754620455774, -1.8617664990785792, -1.7888456319672041, -1.7242746755675922, -1.6678779997343356, -1.6156265235501752, -1.4990854373403775, -1.40112679474351, -1.2317913544020636, -1.0904955803878271, -0.9624462677215346, -0.7309573346609761, -0.4980321866357737, -0.2403415901022992, 0.052549066737836006, 0.4033864620543936, 0.8879126786063646, 1.2829091152372791, 1.6218704242423794, 2.0099528642455122, 2.804211721718919),
        (-3.3321893074094864, -2.8260420282962144, -2.587283243334699, -2.326878761763012, -2.240538944489354, -2.165521713006103, -2.0475949841576577, -1.9500982135942804, -1.8694027883854976, -1.7963026756290978, -1.7304198281698626, -1.67360383346056, -1.622577343363955, -1.5084848202280527, -1.4091499217113306, -1.2371993698058286, -1.0899366200545366, -0.9629588747016281, -0.7280453991849696, -0.49624435476720014, -0.23640840712318115, 0.057348385959176594, 0.4074135602293437, 0.8884681378420717, 1.2900437377163492, 1.6216405945445036, 2.014052996390502, 2.8472071824923804),
        (-3.3127293972620104, -2.791767076940549, -2.5724720917127617, -2.314399198317082, -2.2268099613107544, -2.15794310464339, -2.0372032051131828, -1.945091455711757, -1.8660578828129286, -1.7977667814898017, -1.7346635217337263, -1.6758000316583195, -1.6252977708195393, -1.507294952814781, -1.40609375094915, -1.2385451810504045, -1.0963562700878315, -0.9686788077619938, -0.7347684143434416, -0.5064343439656369, -0.24546471926770286, 0.04735779075230748, 0.3992825216972836, 0.8798502199704643, 1.2783423105374079, 1.6150583597545611, 2.000513164970105, 2.773826140297461),
        (-3.292354231668023, -2.817862654610802, -2.5632503336565535, -2.312770254937065, -2.230772628898327, -2.1582452712237536, -2.034828613427112, -1.9340030426411716, -1.8520087280434514, -1.7820940014685738, -1.7182079541984692, -1.662820917536542, -1.6101157305081504, -1.4929260066813819, -1.3957428615145198, -1.2293865848545678, -1.0865645130748092, -0.9597561473301963, -0.7303005720046196, -0.501709551932044, -0.24023582869645996, 0.059514201126361646, 0.4086309792382837, 0.8943680636054486, 1.278732127587939, 1.6131767491804514, 2.0039984813630296, 2.8065639054061147),
        (-3.2417942388939074, -2.777142024335055, -2.5690668165621267, -2.3179664570487013, -2.225093882088291, -2.1549871108170278, -2.0337273359580705, -1.9379499990874538, -1.8569248099530693, -1.7833239091180568, -1.7224941791938382, -1.6665179225717945, -1.614996843361951, -1.5026109147575686, -1.4047312489607264, -1.2380157463079755, -1.0911050677572731, -0.9642551541884256, -0.7338283327232414, -0.5018261614031688, -0.2392955043180725, 0.05654066584055108, 0.40844090305063685, 0.8944062325315233, 1.2949897694999728, 1.636203610142228, 2.0142097747674454, 2.769616953873479),
    ),
    'intercept': (
        (-4.686864819632046, -4.031516959313585, -3.731869782044507, -3.413353251065907, -3.311190418498101, -3.22492624017786, -3.0924307703043357, -2.9818800776625407, -2.893147817918715, -2.815399493536915, -2.746733968521164, -2.6857075026262014, -2.630701034314695, -2.51156836087756, -2.4067820020725836, -2.2340803090486157, -2.0906968739591147, -1.9650472603022042, -1.741132545845488, -1.533919480816606, -1.3275122943079871, -1.0967870842468588, -0.8022963980470159, -0.3680644411306541, -0.0032602206968839467, 0.31687551213758625, 0.7072607434607602, 1.5896098686567621),
        (-4.370092734710446, -3.814911369356046, -3.5607675739008036, -3.303110511417502, -3.211830891155763, -3.1382666397031937, -3.0136057502781455, -2.9193904923690916, -2.8397125335849585, -2.769422468757973, -2.7072054566406334, -2.6504816618262996, -2.5983343041396365, -2.4871462553792716, -2.3923197040675546, -2.228219414288067, -2.0931217918735916, -1.9670654576504314, -1.751368558044736, -1.5508772231764594, -1.3481223925507075, -1.1225753130541045, -0.8376951154164457, -0.40971617859426157, -0.04446378487633506, 0.2738214063361557, 0.6437422077722177, 1.4787144110374144),
        (-4.210247260799492, -3.723209569797121, -3.499562682612582, -3.257447188168154, -3.1693179823328133, -3.101683520752806, -2.988139147997144, -2.895977724819774, -2.8137398136859093, -2.746419697214141, -2.6872303757855054, -2.6351037795154912, -2.585250129436693, -2.475493503921518, -2.3823517546547888, -2.2234375575248535, -2.089671833410719, -1.9706842118840366, -1.7569600086725927, -1.559861299552561, -1.3553664403780379, -1.135206995050071, -0.8510941717575982, -0.42503148616947234, -0.0583263536774574, 0.26650887799262896, 0.6343592306748338, 1.402852797669475),
        (-4.175763151115213, -3.6980830507953457, -3.4785885516231367, -3.234295240471536, -3.1540848984042325, -3.085048359008928, -2.9710333322672295, -2.880566186858472, -2.8044371301451108, -2.7397792095396682, -2.680499454162946, -2.6280499106315904, -2.5771157962101334, -2.4716249908923573, -2.37881142119462, -2.223312410498484, -2.0901482544558094, -1.972629788481702, -1.7599296772981547, -1.5623665464794003, -1.3621822809618611, -1.1410657722659805, -0.8576398511295383, -0.4353475407356163, -0.06921677946055835, 0.23774535653935092, 0.6218291116102259, 1.3946371195487117),
        (-4.158277215309217, -3.6756128523187774, -3.4550133404964627, -3.218456367943562, -3.1429713256797824, -3.079732733311263, -2.9675848230881208, -2.878261254131088, -2.8026795037922794, -2.7370480155811405, -2.6780783936565893, -2.623597971055114, -2.5754685595459215, -2.4698831574474283, -2.3778607147208413, -2.219896752330365, -2.0883205166298593, -1.971874901275172, -1.762591445765528, -1.5643102129057522, -1.3638513701935557, -1.1403428125111739, -0.8585170615252242, -0.4290085851028123, -0.06614037487007467, 0.24881517888257315, 0.6319881304795393, 1.4412338200566215),
        (-4.1469561635748935, -3.6884241443578825, -3.4620686280941375, -3.2204653380656962, -3.1400531269641374, -3.075658308095733, -2.9671163921823527, -2.878050483453896, -2.800876909282099, -2.73486732870439, -2.675513112178533, -2.6224683125745942, -2.575494948139818, -2.469806433803159, -2.3765425559566262, -2.2203256673003575, -2.090569475753215, -1.973069040835184, -1.761576246070611, -1.5653849397132487, -1.3656896122009488, -1.1427720228792737, -0.85737772484362, -0.4342646506756202, -0.07753635740898494, 0.24015866454373894, 0.6111527247998614, 1.3606350886660386),
        (-4.136621869337622, -3.6758950837729034, -3.4527804678434597, -3.219650407249082, -3.1385870180707105, -3.072059870240648, -2.960804286187388, -2.873814579489417, -2.796199069339282, -2.7307667157194246, -2.672642171960803, -2.6212862524030207, -2.5720820520413485, -2.466853360862781, -2.3764998161434314, -2.2174388213079848, -2.0869532704333675, -1.9685672719939271, -1.7600220278412864, -1.5631935505129997, -1.3653285873407732, -1.141864984944561, -0.8581558800120446, -0.42855146385293114, -0.05771175516407755, 0.254503957376588, 0.6216393943150887, 1.3853522870309407),
        (-4.107835902959757, -3.6481089765445924, -3.436458639259801, -3.210557563825072, -3.1336645149874713, -3.0672831853335984, -2.961320177278771, -2.8753951657720593, -2.797970727395527, -2.7340703083131825, -2.67768617541357, -2.6250708222754358, -2.5766413752124855, -2.4660615660320473, -2.3753656262207903, -2.219706430858401, -2.0894765097518446, -1.9700663300520413, -1.7591298634047123, -1.5644333131976738, -1.3641021169703995, -1.1408553493318825, -0.8579456754809711, -0.4319780447987352, -0.07263130326156021, 0.2464855175464075, 0.6196392603644024, 1.4035955845974168),
        (-4.171246709882946, -3.666827873225254, -3.4446901019015095, -3.210266005169209, -3.1315979457748724, -3.0634409456735203, -2.955362194582151, -2.8679660275179395, -2.7937963599448694, -2.728445781740243, -2.669505673360203, -2.6168184526693854, -2.5683914004533874, -2.4610004757836768, -2.372267143111776, -2.217815158657583, -2.088131604730049, -1.971199592111266, -1.7606342728031144, -1.564905770757747, -1.365360560718047, -1.1419301355254483, -0.8606830275993698, -0.43648805222614045, -0.07162038605465582, 0.24476374283620683, 0.6058313707318489, 1.364924200722907),
        (-4.136409739900582, -3.6801468461943085, -3.4551375267296542, -3.221089394921059, -3.1437905207669803, -3.076567833523503, -2.9649564004969373, -2.8749888842849196, -2.796442053841109, -2.732060321861982, -2.6769879857113184, -2.6239252942257747, -2.574539442975316, -2.4703114086776985, -2.3790854111986577, -2.2217109890036366, -2.0883874170323704, -1.9716223847118124, -1.7626045914151482, -1.5641704273344215, -1.3670742336116173, -1.1451221901100628, -0.8639303245769031, -0.4430132926060585, -0.0822844392750121, 0.23570945870364335, 0.6082343767151707, 1.3996098837756987),
        (-4.0942523015455, -3.642617826735251, -3.4461214725938256, -3.2067645844985955, -3.1313479206604784, -3.0642383614078414, -2.9545863807073123, -2.8652574045193338, -2.791621828905571, -2.7257154388812617, -2.66715519126767, -2.615659670579245, -2.569636335783501, -2.463131607055681, -2.3707620647254464, -2.2161871561464515, -2.0873149614438318, -1.9710971401243655, -1.757611832914654, -1.5615170060544696, -1.3604275355599444, -1.1372828433155762, -0.8562485258785303, -0.4265762477580539, -0.07012002992417427, 0.24118740577295164, 0.6037299418596197, 1.3716453907395239),
        (-4.079803082852206, -3.667519342851623, -3.449080131708334, -3.215073866033904, -3.1331624114916563, -3.0623579025793513, -2.957423788625757, -2.8631333795335214, -2.7880899661777034, -2.7221036087885793, -2.6649033456312656, -2.611478952092408, -2.5645846337846065, -2.462698225948832, -2.3679275900445313, -2.2171356127556243, -2.0857720080219853, -1.9668571847736982, -1.762600659749578, -1.5636333133974443, -1.364168884604106, -1.1421808513927447, -0.8623708894245693, -0.44640335053336566, -0.0861815234906985, 0.21569666482876731, 0.5911732656478875, 1.4039436990985126),
        (-4.060942953004091, -3.655341775978889, -3.4344750010131544, -3.2136967867939057, -3.124074749689814, -3.055608668458609, -2.943916471894774, -2.8537019738302964, -2.7814802596947836, -2.7195496768441365, -2.660651153365987, -2.6101123171374714, -2.5620329232877466, -2.455654284193341, -2.3642176978981992, -2.2105198205035164, -2.0812978718868718, -1.9644215295641503, -1.7563584039640283, -1.5647965146021878, -1.3665757035575197, -1.1434350551663457, -0.8620419097781203, -0.4367834189248359, -0.07542692548459622, 0.24707657119653717, 0.6233085599074406, 1.3629370536878354),
    ),
}

GENERATION = {'seed': 987654321, 'reps': {t: reps for t, reps in zip((25, 50, 100, 150, 200, 250, 300, 400, 500, 750, 1000, 1500, 2500), (200000, 200000, 200000, 200000, 200000, 200000, 200000, 200000, 200000, 120000, 120000, 80000, 60000))}}
