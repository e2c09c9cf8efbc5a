// Generated by make_fixtures.py -- do not edit by hand.
#pragma once

inline constexpr double kAdfSeries[] = {50, 50.151713973556284, 49.286677849690086, 49.112794107587888, 49.435533292249936, 49.633031861749551, 50.233564696433433, 49.824687323923399, 49.474615864898659, 49.038128855435019, 50.580907622666984, 49.460187117040675, 49.019044932148105, 49.200989925451836, 48.461288326778813, 48.957149800149324, 50.380422561041932, 50.211607773292442, 50.332732077916063, 51.2674207781305, 50.923520499400922, 51.810674731919185, 51.269109163491422, 51.353530260147721, 50.984070458850312, 50.800100629133311, 49.664524493318986, 50.598849521190076, 50.671860572421146, 50.844449296045489, 51.487114870377276, 51.351463558271924, 50.867625404903684, 50.072063425057912, 49.714874285203564, 49.874056292508854, 49.826175963776691, 49.577974510514935, 49.778200649906616, 50.084797551218351, 50.87957317927696, 50.080888810228927, 50.471562178389895, 50.73708467148176, 50.5439267703143, 50.587728327406353, 51.343348287558584, 51.428814632891275, 51.398194700614475, 51.154305333127589, 50.919452326559536, 51.038440129827258, 50.665792855580847, 51.315600828099122, 50.900020360921225, 52.28911418377524, 51.541565969549389, 50.95177882544553, 50.801057088287195, 51.361242590322064};
inline constexpr double kAdfTStat = -2.2100798863309921;
inline constexpr double kAdfPValue = 0.20260740176723918;
inline constexpr int kAdfNobs = 58;

inline constexpr double kMacKinnonTau[] = {-4.2000000000000002, -3.4300000000000002, -2.8599999999999999, -1.6100000000000001, -1, 0.5, 3, -20};
inline constexpr double kMacKinnonP[] = {0.00065890020604930037, 0.0099777093987797258, 0.050201099882003088, 0.47797565259418928, 0.75326430120056553, 0.98487309630655218, 1, 0};

inline constexpr double kJohansenX[] = {50.764275623892154, 51.553313269163255, 51.214054677833808, 50.022313231698739, 49.82682134178313, 50.946828355384341, 51.433651970864659, 51.382467979576916, 51.580033561514632, 51.144546963319875, 51.500938283860854, 51.713515106233373, 51.787162376661925, 51.282923481019196, 51.502394334713443, 51.692060897632217, 51.425512050150232, 52.311484014640556, 51.916155698243912, 51.863524459076437, 52.510783841988363, 52.026282096869551, 51.617939962201326, 51.69907190497981, 50.516982953904119, 49.717431115557787, 49.135720375132692, 49.433845782233504, 49.764028389819437, 49.874581204689235, 50.181100517653647, 49.510622557090691, 49.726816284128667, 49.053161663459264, 49.243779100623648, 48.938533734828432, 48.982192435457016, 48.357924735615683, 48.189567036423682, 47.799562595300642, 47.804830651981554, 47.52988672308576, 47.991331408266518, 48.238537132511411, 48.086870030450463, 48.719926006723881, 48.747513792448814, 48.834410576893596, 48.474029326415845, 48.267286622245201, 48.107146505878532, 47.906441103621432, 48.18765265585283, 48.628216550040172, 48.144142919505683, 47.716344492015402, 47.542595234619732, 47.092090309508364, 46.935496999014916, 47.052700159143235, 47.837160562712121, 48.130287936516943, 47.600884694402367, 47.449480389355074, 47.449234714558798, 47.832248767027991, 47.509473282774223, 46.937408783006852, 46.397067297873484, 45.690570215145947, 45.123828387107849, 44.841872849562975, 44.528485314324939, 45.151755821480215, 45.193634755380771, 45.459925315061696, 45.596058185196725, 45.645865971005279, 45.717628215166336, 44.935246389745515, 45.102043142753942, 44.702988504616286, 44.491236620298473, 44.746584540747101, 45.026319841145302, 44.911110732675908, 44.718458329716142, 44.660305139229571, 45.298933690694277, 45.920119264456815, 45.850634925295786, 45.638778909952691, 45.137337346166433, 45.741926127600756, 45.940928282094127, 45.800297522284616, 44.95026545346213, 45.026881252066062, 44.541055738733796, 44.538627756615909, 44.507375914955048, 44.643585183773752, 44.624775820349008, 44.675808140411092, 44.353335469009984, 44.736825155528642, 44.577837431945504, 44.13454268023515, 45.218619497268072, 45.370447061159624, 45.992579649429828, 45.997851072821064, 46.666900242436512, 46.551861650521261, 47.924670752212549, 47.532597656296765, 47.375976577288547, 48.244937600388155, 48.695032176483231, 49.542170390346527};
inline constexpr double kJohansenY[] = {50.814275623892151, 51.682480896458884, 51.276536071601349, 50.060099439861375, 49.796916349593715, 51.049814641152025, 51.530157678083739, 51.506301362786907, 51.678902503144521, 51.221643466310461, 51.613175939141691, 51.742432527241263, 51.863677553799569, 51.388736289727866, 51.595522918126115, 51.768989505232646, 51.468135903974705, 52.240597511186259, 51.916538960426124, 51.822460468888067, 52.478119478020176, 52.113007614659402, 51.654710249016055, 51.75135550026814, 50.562965939834598, 49.7741267912129, 49.100962209840425, 49.430843685520344, 49.810947165757035, 49.840366203909696, 50.211396534623191, 49.512782775872942, 49.781077152202165, 49.11314814073468, 49.267829767077025, 48.971710066056062, 49.036158001785523, 48.406101852664818, 48.25743801848639, 47.821063118185798, 47.921027544380401, 47.640192135525993, 48.108311983182141, 48.318525625701696, 48.190783309222589, 48.837423374985327, 48.802032506204355, 48.892219706302399, 48.497901935604048, 48.316196536282206, 48.154368458816613, 47.86679732936156, 48.192194757778736, 48.633638098856458, 48.116035334699291, 47.745619132534145, 47.579443835952446, 47.087145749547112, 46.930447702491641, 47.085496239099022, 47.859829325928878, 48.203528404461139, 47.586811057639906, 47.464923820602692, 47.552458050838339, 47.95103136299528, 47.613849263444948, 47.002656583808957, 46.476994520606134, 45.715723783533953, 45.135511304873546, 44.852135236421056, 44.491798347586297, 45.150037014683555, 45.138931843786821, 45.482520863868238, 45.536433398911754, 45.626663269309056, 45.712634537540566, 44.928794279093836, 45.132125458940671, 44.802193580883937, 44.622291081592223, 44.757506297646849, 45.117487062917952, 44.970310019158262, 44.808477737921869, 44.682361982769216, 45.321850803064557, 45.958755873549407, 45.820928657237928, 45.585931237651316, 45.080830869483968, 45.734382272120413, 46.005557062773654, 45.921704936438118, 45.056546149000795, 45.114431695050428, 44.61795090995156, 44.635137098557166, 44.600194324303565, 44.816071475502198, 44.742461836259032, 44.682880620744513, 44.354983150465841, 44.851508944619106, 44.665153362495261, 44.180468110256996, 45.218373765899251, 45.464757767126692, 45.997153679134684, 46.00954703580696, 46.648763785758817, 46.601309925417972, 47.880684919990372, 47.587648870662804, 47.35793436235015, 48.286676533502785, 48.693797355268934, 49.54062317547649};
inline constexpr int kJohansenN = 118;
inline constexpr double kJohansenEig[] = {0.16675355605706274, 0.017727545407729348, 2.5001217473770292e-14};
inline constexpr double kJohansenTrace0 = 23.63686201289342;
inline constexpr double kJohansenTrace1 = 2.1106141320539593;
inline constexpr double kJohansenBeta[] = {1, -1.0018871875929067, 0.12864378280114749};
inline constexpr double kJohansenBetaSe[] = {0.0038054311652355329, 0.18204563453821621};

inline constexpr double kNwDiff[] = {-0.36592083497711175, -0.2848038260787753, -0.71344223009801744, -1.0532162178852957, -0.3266937903961119, -0.077977238664463489, 0.22467169994705732, 0.51019819613333905, 0.65412543537045909, 0.73868386701262345, 0.27880233345874361, 1.0650710373014318, 0.5836796075515609, 0.9327833031770183, 1.4610405026798883, 1.2412643250503517, 0.25896932461822975, -0.088874817248747129, 0.041756810176991122, 0.89290022988460604, 0.76098540707055862, 0.56423774116384062, 0.0081862394592984722, -0.022881977786941232, -0.0089915407898561728, -0.45782707872087047, -0.57497592723716395, 0.10346994826171596, 0.66131860248641638, 0.25217789782303329, 0.19840587608378746, 0.50507414077310586, -0.015759316678547575, -0.14411319389795552, -0.12491659142814196, 0.10006267522528367, -0.43471837833363547, 0.24485401008967378, 0.10000138469010372, -0.15508808259968307, 0.8039629766162153, 0.9854906935619383, 0.43942809817870082, 0.21354125937631083, 0.78147727719611593, 1.0059669652798566, 0.32057572030775094, 0.08661332783590614, 0.12947044628275053, 0.46149144640065942, 1.086785641523589, 0.80613263488643438, 0.90308174464990909, 0.38996022719476403, 0.29124574255279601, 0.25439966931300489, 0.49889126155173658, 0.6897346657817629, 0.54268708465939486, 0.66020031375362498, 0.715802256041984, 0.3954785499061293, 0.50612207262968667, -0.54460807193611072, 0.31184463551844327, -0.38328142445951807, 0.12351202917377485, 0.38472961870813221, 0.40570962294263213, 1.0854029017535047, 0.89587001683716028, 0.24012835573303981, 0.97941906523093691, 0.99338432072898053, 0.065608434554096817, -0.022708227749915599, 0.07642456347197929, 0.87408943627842994, 0.67420332514676828, 0.59342557242761274};
inline constexpr int kNwLag = 3;
inline constexpr double kNwAlpha = 0.34067767253135961;
inline constexpr double kNwSe = 0.080545190776774078;
inline constexpr double kNwT = 4.2296463543742338;
inline constexpr double kNwP = 6.2476252460441552e-05;

inline constexpr double kVrX[] = {-0.00084057753988909015, 0.0034940419159523767, -0.014324748839895204, -0.0077876211566900791, 0.00059460079619157917, -0.023657184487427693, 0.010114688455552126, -0.015533300620421115, -0.014672158868066838, 0.0084188540354888514, 0.023215978163890049, -0.0061002474763828234, 0.013251379524073206, -0.0016688287397601512, -0.018707701157256142, -0.00047503323574395667, -0.032696320185673006, 0.018440061963743284, -0.033037371548647665, -0.013073892841631431, -0.019793043243647106, -0.020510481896635565, 0.010996314950979389, -0.032094401873420837, 0.016810722979343187, 0.012583500648397295, 0.011319481224099927, -0.011528688783975565, 0.0023099134385130616, -0.014401928812657632, 0.023975215437947454, 0.024725772703380448, -0.023333383842659303, 0.0051379830205042004, 0.01412834445097573, -0.012799232955863483, 0.010805174701409253, -0.0061036336266814643, 0.012903483863056881, 0.0043470616260849158, 0.017150171062944902, -0.012940649342315376, -0.036483587475047922, -0.011882454847435549, -0.0077796381179256555, -0.031326453746545406, -0.012560006096873308, 0.017196024594518841, -0.017240229758971305, -0.027508149732946241, -0.0088979545784642674, 0.024003357830221492, -0.025960472493865253, -0.014768531632290794, 0.030477592288411032, -0.0049346850515159255, -0.0046819170574330399, 0.019696167969800761, 0.023283699222404849, 0.0007316481798761977, -0.012405118031500156, 0.010856547508699091, 0.016668600190760594, 0.016583113711955987, -0.01019148567475449, 0.020616237371575523, 0.033348539942453626, 0.0051796349759325438, 0.0066616332501904674, -0.041826800419212787, -0.04475901868470139, -0.010720863818042541, 0.012958124416947686, 0.026909844061886481, -0.0020104732121354976, 0.0015534395561892028, 0.0033325040919769595, 0.042151240295665034, -0.0098933911368184087, -0.010605199789033834, -0.0023043392557476131, 0.018745730352634386, -0.018810531445205062, -0.0042633073636749218, -0.029130544818844625, 0.022483375679125329, -0.018224049963659648, -0.0049019456147088346, -0.010965772890640366, 0.0031973236289541303};
inline constexpr double kVrY[] = {0.012316341085169574, 0.00073509912369299087, -0.0073638908486246225, 0.015042788142238188, -0.0044737590500926452, 0.0075916744834184785, 0.0073021293967771199, 0.008099423829861039, 0.0073985035932345516, 0.0027762232191806597, 0.0081117035458361623, 0.0097412185344710779, 0.0064923622425262142, -0.002722365419441446, 0.0004904286328295507, 0.014883976899647324, 0.0063993793093411137, -0.012180035687253175, 0.020633293837116193, 0.0037997705248131609, 0.0081873575361761809, -0.017754515687978711, 0.0018728538855124395, -0.011282622771823516, 0.0051407613802950149, -0.0044589186944504833, 0.0079688403460325651, -0.0117995992050305, 0.0064014989223127473, 0.016749652863512116, 0.0052588131070198316, 0.0033262518368612983, -0.014481350927662196, 0.010825655089277512, -0.0083678762134686002, -0.00061396296680257681, 0.0047187296021985979, -0.014153413511003641, 0.024683037527312029, -0.0146923111916459, 0.004000944854908324, 0.026129423701674002, -0.022390244842616744, -0.006251273355766117, -0.0020240304897191385, -0.013774502174312461, -0.0038052155296952783, -0.0067587659031642855, 0.013275704502075086, 0.0080379489218616092, 0.019802938029865606, 0.013536037642407947, -0.006903858903665152, -0.0057116387979925919, 0.010211362582430451, 0.012329006403598436, 0.025638143045070522, 0.0092064542679612515, 0.00020343335893343903, 0.00069257056273123421, -0.0046622738332561635, 0.0076133981769704777, 0.0064293037951018506, -0.0069747082916324253, 0.015041923770898588, -0.0047605478778989232, -0.014581163057331712, -0.0018746862468621622, -0.0064908103433212738, -0.0059687275975480137};
inline constexpr double kVrF = 2.8968181322436957;
inline constexpr double kVrPLower = 0.99999605349229481;
inline constexpr double kVrPUpper = 3.9465077052358527e-06;
inline constexpr double kVrPTwo = 7.8930154104717053e-06;

inline constexpr double kDescSeries[] = {-41.966312621626997, 39.962430252747353, 40.014976650435337, 27.387478935348575, 41.511434213830022, 39.999979947058897, 40.735065113320651, -6.1507914352188706, 40.660312971255337, 42.620666094041326, 37.631512602699708, 66.006723526523274, 60.27818632017707, 39.538324483117187, 39.989178271898332, 39.772230661380476, -135.81761942884955, 24.87695713951328, 38.745626378172332, 47.093031322969416, 30.118867697801537, 40.084085978779427, 34.131291576554162, 40.298674901196641, 42.0140745041492, 36.516147419735873, 40.754391095725289, 41.000378369309558, 40.629504108747589, 39.999996302988016, 39.98585243876888, 40.106192076517075, 37.669807839891568, 39.144614970897948, 29.247768548580083, 74.120137733264045, 40.152669886543507, 41.331588706950065, 41.28766916814628, 39.990773811219569, 39.870224044857828, 39.859524564217658, 22.074407802634706, 39.529267619397082, 40.897718117276881, 39.459612623675064, 31.743153826977775, 39.888457088101831};
inline constexpr double kDescMean = 33.84992175461872;
inline constexpr double kDescMedian = 39.987515355333606;
inline constexpr double kDescSd = 29.649920091056895;
inline constexpr double kDescSkew = -4.3377997310270411;
inline constexpr double kDescKurt = 24.421512569897526;

inline constexpr double kStudentCdf_2_10 = 0.96330598261462974;
inline constexpr double kStudentCdf_m1_5 = 0.18160873382456127;
inline constexpr double kFCdf_2_10_20 = 0.91021728515625;
inline constexpr double kNormCdf_m196 = 0.024997895148220435;
