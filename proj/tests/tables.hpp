// Reference data shared by the unit and acceptance tests: the exact
// psi-chart ODE coefficient tables and the high-precision period jet values
// at the Fermat point for n = 3, 4, 6, 8, 10.
#ifndef FP_TESTS_TABLES_HPP
#define FP_TESTS_TABLES_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace fp::tables {

struct OdeTable {
    int n;
    int level;  // 0 = Omega, 1 = Omega', 2 = Omega''
    // per derivative order k = 0..m: list of (degree, coefficient)
    std::vector<std::vector<std::pair<int, long long>>> p;
};

inline const std::vector<OdeTable>& odes() {
    static const std::vector<OdeTable> t = {
        {3, 0, {{{1, -1}}, {{2, -15}}, {{3, -25}}, {{4, -10}}, {{0, 1}, {5, -1}}}},
        {3, 1, {{{2, -16}}, {{3, -65}}, {{4, -55}}, {{0, -1}, {5, -14}}, {{1, 1}, {6, -1}}}},
        {4, 0, {{{1, -1}}, {{2, -31}}, {{3, -90}}, {{4, -65}}, {{5, -15}}, {{0, 1}, {6, -1}}}},
        {4, 1,
         {{{2, -32}}, {{3, -211}}, {{4, -285}}, {{5, -125}}, {{0, -1}, {6, -20}},
          {{1, 1}, {7, -1}}}},
        {4, 2,
         {{{3, -243}}, {{4, -781}}, {{5, -660}}, {{0, 2}, {6, -205}}, {{1, -2}, {7, -25}},
          {{2, 1}, {8, -1}}}},
        {6, 0,
         {{{1, -1}}, {{2, -127}}, {{3, -966}}, {{4, -1701}}, {{5, -1050}}, {{6, -266}},
          {{7, -28}}, {{0, 1}, {8, -1}}}},
        {6, 1,
         {{{2, -128}}, {{3, -2059}}, {{4, -6069}}, {{5, -5901}}, {{6, -2380}}, {{7, -434}},
          {{0, -1}, {8, -35}}, {{1, 1}, {9, -1}}}},
        {6, 2,
         {{{3, -2187}}, {{4, -14197}}, {{5, -23772}}, {{6, -15421}}, {{7, -4550}},
          {{0, 2}, {8, -644}}, {{1, -2}, {9, -42}}, {{2, 1}, {10, -1}}}},
        {8, 0,
         {{{1, -1}}, {{2, -511}}, {{3, -9330}}, {{4, -34105}}, {{5, -42525}}, {{6, -22827}},
          {{7, -5880}}, {{8, -750}}, {{9, -45}}, {{0, 1}, {10, -1}}}},
        {8, 1,
         {{{2, -512}}, {{3, -19171}}, {{4, -111645}}, {{5, -204205}}, {{6, -156660}},
          {{7, -58107}}, {{8, -11130}}, {{9, -1110}}, {{0, -1}, {10, -54}}, {{1, 1}, {11, -1}}}},
        {8, 2,
         {{{3, -19683}}, {{4, -242461}}, {{5, -724260}}, {{6, -830845}}, {{7, -447195}},
          {{8, -124887}}, {{9, -18900}}, {{0, 2}, {10, -1542}}, {{1, -2}, {11, -63}},
          {{2, 1}, {12, -1}}}},
        {10, 0,
         {{{1, -1}}, {{2, -2047}}, {{3, -86526}}, {{4, -611501}}, {{5, -1379400}},
          {{6, -1323652}}, {{7, -627396}}, {{8, -159027}}, {{9, -22275}}, {{10, -1705}},
          {{11, -66}}, {{0, 1}, {12, -1}}}},
        {10, 1,
         {{{2, -2048}}, {{3, -175099}}, {{4, -1921029}}, {{5, -6129101}}, {{6, -7997660}},
          {{7, -5088028}}, {{8, -1740585}}, {{9, -337227}}, {{10, -37620}}, {{11, -2365}},
          {{0, -1}, {12, -77}}, {{1, 1}, {13, -1}}}},
        {10, 2,
         {{{3, -177147}}, {{4, -4017157}}, {{5, -20308332}}, {{6, -38119741}}, {{7, -33437800}},
          {{8, -15531538}}, {{9, -4101174}}, {{10, -638187}}, {{11, -58905}},
          {{0, 2}, {12, -3135}}, {{1, -2}, {13, -88}}, {{2, 1}, {14, -1}}}},
    };
    return t;
}

struct JetTable {
    int n;
    // rows[k][j] = {re, im} decimal strings of d^k/dpsi^k (psi^-1 w_j) at 0
    std::vector<std::vector<std::array<const char*, 2>>> rows;
};

inline const std::vector<JetTable>& jets() {
    static const std::vector<JetTable> t = {
        {3,
         {{{"-2.498836213357162831873140837384937368932484871519", "0"},
           {"-1.249418106678581415936570418692468684466242435759",
            "-1.7196764931417234621669954291797891220476917996"},
           {"0.2845681230885692022508578578776314420051084265322",
            "-1.7196764931417234621669954291797891220476917996"},
           {"1.0515612379721445113445719961626815052407838576780",
            "-1.4589100573179453148308494931916829184851124375"}},
          {{"-2.2550683836960622558295812512914672499779372160315", "0"},
           {"-1.12753419184803112791479062564573362498896860801576",
            "-0.366358067107477798519065311128934465216399570358"},
           {"-1.76018670120301548276885157450397059554092744317944",
            "-0.366358067107477798519065311128934465216399570358"},
           {"-2.07651295588050766019588204893308908081690686076128",
            "-3.2974468423280359976607145327721968031946480597382"}}}},
        {4,
         {{{"-2.6305007891714254721008878733771539048570318456678",
            "-1.5187203387316455066194503598653972666836741161215"},
           {"0", "-3.0374406774632910132389007197307945333673482322430"},
           {"1.9728755918785691040756659050328654286427738842508",
            "-1.8984004234145568832743129498317465833545926451519"},
           {"3.0910962000739312317013411212622607065482265809874",
            "-1.5571348227820267233132177533312041790711266412835"},
           {"8.1237333689468265609738742694048016279757991221218",
            "1.0441202328780062858008721224074606208450259548335"}},
          {{"-1.7652309997349200251545904282363294070345325464779",
            "-3.0574697786364848492294183051855823667429225187366"},
           {"0", "-2.0383131857576565661529455367903882444952816791578"},
           {"-1.0297180831787033480068444164711921541034773187788",
            "-3.8218372232956060615367728814819779584286531484208"},
           {"6.2229582192051493989229936831634050808663578555865",
            "-9.1981878638474427383992464553611084815861408077043"},
           {"23.103844562736249323218868692557211570750126380035",
            "2.102010472812583333845225084815087877135759231631"}},
          {{"0", "-3.6475626111241597719796606755501950005569158882009"},
           {"0", "-1.8237813055620798859898303377750975002784579441004"},
           {"0", "-4.5594532639051997149745758444377437506961448602511"},
           {"7.4239915270996435118023941654188079356976001723687",
            "-5.9272892430767596294669485977690668759049883183264"},
           {"14.847983054199287023604788330837615871395200344737",
            "2.507699295147859843236016714440759062882879673138"}}}},
        {6,
         {{{"-3.8161185324494391627280485350027433391930427001819",
            "-1.5806880517638697105931348806958452781439436434080"},
           {"0", "-5.3968065842133088733211834156985886173369863435898"},
           {"4.1247670733968291524118339040310075042726387768625",
            "-3.6882721207823626580506480549569723156692018346186"},
           {"7.7213301841577597178294495343908131563941099396795",
            "-6.5378420238843938904675174363369161662427061596022"},
           {"36.652393457346875929742257420586211238728395049501",
            "1.106481636234708797415194416487091694700760550386"},
           {"48.566015285806579802609581727337059824866887266236",
            "85.662936954758874887607628716480310364817126748075"},
           {"-79.54076015393166770421214663319403245834356423335",
            "196.18203141762876382343979311137939091471723541690"}},
          {{"-4.9427596858521470439464490243339210097674280745468",
            "-4.9427596858521470439464490243339210097674280745468"},
           {"0", "-4.9427596858521470439464490243339210097674280745468"},
           {"-6.5903462478028627252619320324452280130232374327291",
            "-11.5331059336550097692083810567791490227906655072759"},
           {"24.144346199631754134766810249282126273948872459738",
            "-48.858144628892489354499055370951731322786012832473"},
           {"144.52215375129284286534779653316753889053954216206",
            "3.45993178009650293076251431703374470683719965218"},
           {"151.86433666610878607797681930356237316793770042894",
            "258.45674793015711260452829152066785740527148338213"},
           {"-56.50663208075046042412449309954795381401563406213",
            "613.45477679645929547001990457993602385235785703484"}},
          {{"-4.6441270357678197835318681937020736973496995008407",
            "-11.2119144751342304076255771697966315994796737217232"},
           {"0", "-6.5677874393664106240937089760945579021299742208826"},
           {"-8.115829784622350551937665040661915801246540721163",
            "-26.161133775313204284459680062858807065452572017354"},
           {"54.767854772132856331270592799113784290134175521105",
            "-63.685925322037204156561180058839749007638812766105"},
           {"162.82527983846981926047663877693240360663039344073",
            "7.84834013259396128533790401885764211963577160521"},
           {"344.48163834407703812087952468189078184814402084376",
            "112.78224567225809494205033776908083948941163124280"},
           {"1072.1123063607163448403977547344237402344966424813",
            "1391.5308307404938106761316252303195970959088096991"}}}},
        {8,
         {{{"-4.9785799720496930507747921898461986154403080395360",
            "-1.6176386921896175337143530317410597717480219659793"},
           {"0", "-8.4700661553386955310286234546684833703778139605822"},
           {"7.3985082698848468682153621311358138742741758951494",
            "-6.0661450957110657514288238690289741440550823724223"},
           {"15.521444569480047815142982675953666859605588432469",
            "-18.478878337744892885403565914587961256677111260147"},
           {"115.918534030694685167818732050985382754839241618831",
            "-0.909921764356659862714323580354346121608262355863"},
           {"171.00053567444857492814073395549799982886575099854",
            "313.11070052434443007281565030994988048999479649409"},
           {"-237.42106810694690857324251245335547964181161368426",
            "787.70530241917879012946616761702112831417183248110"},
           {"-1686.4530516055867838283932723145591297712408139489",
            "2487.5611012581987861695160697051963159470628728096"},
           {"-16471.874995638880781458751115648039791492142263967",
            "2669.737705830431680695313456131602195111703562215"}},
          {{"-9.4515283097221295111620761073770856827308224012874",
            "-6.8669372716597515173892931197897419902508025689766"},
           {"0", "-9.9379249789913804178042978258962143048211284355529"},
           {"-21.764850893375382549160726113885873784005422767293",
            "-25.751014768724068190209849199211532463440509633662"},
           {"65.88911772374300628935804137880508712445638161303",
            "-169.28127096143616856337721687187304104334984144693"},
           {"578.77473215658994168262639151202978696437898354217",
            "-3.86265221530861022853147737988172986951607644505"},
           {"725.90372471074018452000029887153842873212578027030",
            "1112.09178030317334102260822159100152286226449834698"},
           {"734.7324258321011566031910025633288215893235057076",
            "3343.8387239270019981135415695286231521929827003302"},
           {"-7159.056823312710140677901536796030146715697968528",
            "17617.206368197243150988346082275778437584920753486"},
           {"-90626.647351920809172619095575434756523108044279743",
            "11333.137273631327852515707150320925114590343898229"}},
          {{"-16.806561019422849312269832352009342977876907609673",
            "-23.132246732429185448909462521434209901405921690322"},
           {"0", "-17.671464031278508772564686649298706358119787922072"},
           {"-50.185533671994791383045017753800144421329074951460",
            "-86.745925246609445433410484455378287130272206338706"},
           {"221.95678624559547983862578412450033693316841867100",
            "-337.23708719611925373678195407163657311580200977125"},
           {"911.65498350419032128827888645530659780751810786407",
            "-13.01188878699141681501157266830674306954083095081"},
           {"2445.3090802647727023962766701289574672992521571192",
            "137.0876884056578473166187857839123664517133498014"},
           {"12924.689781352231768392200114509752353568594909033",
            "11264.192366305802692892219839958196122134298556442"},
           {"-24116.292643564989239122644020586952813081558966530",
            "82912.023569729690699056143745831002306604299659552"},
           {"-329667.12654737598673990727297340604105653962245347",
            "38177.27136493339584850788288914963324342949446359"}}}},
        {10,
         {{{"-6.1287041848510312968524977725011929437602147015724",
            "-1.6421813369800760117009813252928577078246336026536"},
           {"0", "-12.2574083697020625937049955450023858875204294031447"},
           {"12.037397788167426218729281780667266943751269548624",
            "-9.031997353390418064355397289110717393035484814595"},
           {"27.312019454406095506857335436482159271220735573794",
            "-41.962865901850661431406798885595895225150432471364"},
           {"295.12756484443208569907663512586667581674686532870",
            "-7.22559788271233445148431783128857391442838785168"},
           {"463.75600668745516042030737797516188949327333240609",
            "902.76482747701071847012187563965326292891991245097"},
           {"-490.6992111134161672778702190148335902338846167065",
            "2413.6561548381486952814854354510879904491955029020"},
           {"-5226.7262548673167712243263674925206960014866170004",
            "12399.2681799932291923553293543373609249912541101722"},
           {"-87758.930304734466239946805413959289760375671329147",
            "19613.606769852686558053549503222647288827780744506"},
           {"-267243.06641035435491475517276367782480469039201236",
            "-334637.57216828511139424612305925841814677484655499"},
           {"408550.8332803312580661833410910600778638248660215",
            "-1510914.1272862746388791419893869308111718569019075"}},
          {{"-15.259757034379388671935825371703698297567425641773",
            "-8.810224831567225391665754056669364059714909559154"},
           {"0", "-17.620449663134450783331508113338728119429819118308"},
           {"-53.409149620327860351775388800962944041485989746204",
            "-48.456236573619739654161647311681502328432002575347"},
           {"146.52768642466623150661682795899766374816653619755",
            "-456.42856872908854867509931235156281596585374267669"},
           {"1776.5078699587536434615933083914477625690023449946",
            "-38.7649892588957917233293178493452018627456020603"},
           {"2488.0289368164005340230389591704008825022925140705",
            "3620.9882682210465966515243754173533676674423376528"},
           {"6483.599298914837892247856505266963441910546679476",
            "12949.150566602818604182534276058701068030391605056"},
           {"-28041.137967819379730286206309759412087244715632439",
            "105205.630801909578547168347597310300130841715704550"},
           {"-580102.19987902568453989260057486371175372543708816",
            "105226.06822345570235881139628148689122759889103649"},
           {"-1433746.3511078977581370282968790135942168789815685",
            "-1870724.4919681340288418362114582284973413879522313"},
           {"589149.8980873339792599638580039835023416423326747",
            "-8105982.4897673671630820806002140991307841075226046"}},
          {{"-39.455433465934517046933916962012378052577139915962",
            "-39.455433465934517046933916962012378052577139915962"},
           {"0", "-39.455433465934517046933916962012378052577139915962"},
           {"-177.54945059670532671120262632905570123659712962183",
            "-217.00488406263984375813654329106807928917426953779"},
           {"656.20497696394358086068405656213301138327999534626",
            "-1228.30876221999407804122585251131249314564852412771"},
           {"3555.9681376518289257503766665520241675739404834017",
            "-173.6039072501118750065092346328544634313394156302"},
           {"11142.3104466241837998456923217759224035900926436254",
            "-1739.4694674374627638596097348897010699717386162135"},
           {"87332.205496291727701229573587282838816862475017034",
            "57991.068149628672753482415211767158784663892415139"},
           {"-125578.54930491914340998844308344886477924660112436",
            "600639.18512793261821499297171690837438454398094743"},
           {"-2561879.1036671212504804858709923461980238260507624",
            "471241.1105329194802518584161366992235612857279958"},
           {"-6420844.5124437464421039361412557274055334472129359",
            "-5796765.9685451858237645260271137091523284624676218"},
           {"-16486768.566512567548337722233021377371115510111756",
            "-36301576.737872400519539269895777255152616367270300"}}}},
    };
    return t;
}

struct ChargeTable {
    int n;
    long d;  // quadratic field discriminant part; 1 = rational
    // rho[i][c] = {an, ad, bn, bd}: component an/ad + (bn/bd) * sqrt(d)
    std::vector<std::vector<std::array<long long, 4>>> rho;
};

// Published charge vectors in the alpha basis, in summand order: the (n,0)
// pair, the (n-1,1) pair, the (n-2,2) pair, then the Hodge-Tate singleton
// where one exists (n = 4: rho5; n = 6: rho7).
inline const std::vector<ChargeTable>& charges() {
    auto r = [](long long n, long long d = 1) { return std::array<long long, 4>{n, d, 0, 1}; };
    static const std::vector<ChargeTable> t = {
        {3,
         5,
         {{{{5, 2, -1, 2}}, r(-8), r(0), r(1)},
          {{{5, 2, -1, 2}}, {{-3, 1, 1, 1}}, r(2), r(1)},
          {{{5, 2, 1, 2}}, r(-8), r(0), r(1)},
          {{{5, 2, 1, 2}}, {{-3, 1, -1, 1}}, r(2), r(1)}}},
        {4,
         1,
         {{r(1), r(0), r(-3, 4), r(0), r(101, 16)},
          {r(1), r(2), r(5, 4), r(-5, 2), r(-11, 16)},
          {r(1), r(0), r(7, 12), r(0), r(-59, 16)},
          {r(3, 2), r(1), r(15, 8), r(11, 4), r(-33, 32)},
          {r(1), r(1, 2), r(5, 4), r(13, 8), r(-11, 16)}}},
        {6,
         2,
         {{r(1), r(0), {{1, 3, -1, 1}}, r(0), {{53, 10, 9, 1}}, r(0), {{-593, 2, -651, 2}}},
          {r(1), {{2, 1, 1, 1}}, r(7, 3), {{-2, 1, -4, 1}}, r(-7, 10), {{395, 3, 605, 6}},
           r(229, 2)},
          {r(1), r(0), r(4, 3), r(0), r(-97, 10), r(0), r(239)},
          {r(1), r(1), r(7, 3), r(5), r(-7, 10), r(-205, 6), r(229, 2)},
          {r(1), r(0), {{1, 3, 1, 1}}, r(0), {{53, 10, -9, 1}}, r(0), {{-593, 2, 651, 2}}},
          {r(1), {{2, 1, -1, 1}}, r(7, 3), {{-2, 1, 4, 1}}, r(-7, 10), {{395, 3, -605, 6}},
           r(229, 2)},
          {r(1), r(1, 2), r(7, 3), r(13, 4), r(-7, 10), r(-85, 12), r(229, 2)}}},
        {8,
         5,
         {{r(1), r(0), {{3, 4, -1, 1}}, r(0), {{225, 16, 25, 2}}, r(0),
           {{-492059, 448, -11851, 16}}, r(0), {{37679073, 256, 1430785, 16}}},
          {r(1), {{3, 1, 1, 1}}, r(15, 4), {{-21, 4, -23, 4}}, r(9, 16),
           {{7983, 16, 3781, 16}}, r(194305, 448), {{-2904321, 64, -1375003, 64}},
           r(-10628943, 256)},
          {r(1), r(0), {{11, 4, -1, 5}}, r(0), {{-1259, 80, -23, 10}}, r(0),
           {{297933, 448, 6101, 80}}, r(0), {{-15637823, 256, -87811, 16}}},
          {r(1), {{1, 1, 1, 5}}, r(15, 4), {{173, 20, 5, 4}}, r(9, 16),
           {{-1019, 16, -1883, 80}}, r(194305, 448), {{1475929, 320, 82033, 64}},
           r(-10628943, 256)},
          {r(1), r(0), {{3, 4, 1, 1}}, r(0), {{225, 16, -25, 2}}, r(0),
           {{-492059, 448, 11851, 16}}, r(0), {{37679073, 256, -1430785, 16}}},
          {r(1), {{3, 1, -1, 1}}, r(15, 4), {{-21, 4, 23, 4}}, r(9, 16),
           {{7983, 16, -3781, 16}}, r(194305, 448), {{-2904321, 64, 1375003, 64}},
           r(-10628943, 256)}}},
        {10,
         3,
         {{r(1), r(0), {{3, 2, -2, 1}}, r(0), {{182, 5, 28, 1}}, r(0),
           {{-279023, 84, -2699, 1}}, r(0), {{6287743, 10, 1426516, 3}}, r(0),
           {{-772191889, 4, -138556957, 1}}},
          {r(1), {{4, 1, 2, 1}}, r(11, 2), {{-14, 1, -13, 1}}, r(22, 5),
           {{1512, 1, 876, 1}}, r(108889, 84), {{-586535, 3, -694265, 6}},
           r(-5247011, 30), {{229380382, 5, 134971631, 5}}, r(169569847, 4)},
          {r(1), r(0), r(7, 2), r(0), r(-198, 5), r(0), r(199693, 84), r(0),
           r(-9080491, 30), r(0), r(274607139, 4)},
          {r(1), r(2), r(11, 2), r(23), r(22, 5), r(-324), r(108889, 84), r(183955, 6),
           r(-5247011, 30), r(-25293169, 5), r(169569847, 4)},
          {r(1), r(0), r(9, 2), r(0), r(-118, 5), r(0), r(132871, 84), r(0),
           r(-2176657, 10), r(0), r(207439973, 4)},
          {r(1), r(1), r(11, 2), r(29, 2), r(22, 5), r(-72), r(108889, 84), r(124105, 12),
           r(-5247011, 30), r(-18289309, 10), r(169569847, 4)}}},
    };
    return t;
}

// Reference c+ values (scale l_n = 1) for the three resolved summands of
// each n, signs included.
struct DeligneTable {
    int n;
    std::array<const char*, 3> c_plus;
};

inline const std::vector<DeligneTable>& deligne() {
    static const std::vector<DeligneTable> t = {
        {3,
         {"-5.587567637704784064376190685029719491579683585192",
          "5.042486199854973654128289120367407561074741855844668", ""}},
        {4,
         {"-42.0880126267428075536142059740344624777125095306",
          "9.41456533191957346749114895059375683751750691454905533", ""}},
        {6,
         {"8007.10875567897668453754447710594661081111628358109",
          "-444.84837172669323395518041219005289087906852670921",
          "286.85024228542971686694718641015790360409402"}},
        {8,
         {"-5212961.1265694976222689791525301848232107600478095",
          "79815.6087659784105899046934127518572733437994818904",
          "-20875.2118612791484236100896801533250654143203133"}},
        {10,
         {"8628829314.63181296956648940152332863328728264485086",
          "-36916404.2175706170751471487392255869214751161125761",
          "4474246.1550369742331223061834922036711622476664701339"}},
    };
    return t;
}

}  // namespace fp::tables

#endif
