// Positive ordinates of the first 500 nontrivial zeros of ζ, shortest
// round-trip decimal form of the correctly rounded doubles.

pub(crate) const EMBEDDED_ORDINATES: [f64; 500] = [
    14.134725141734695,
    21.022039638771556,
    25.01085758014569,
    30.424876125859512,
    32.93506158773919,
    37.586178158825675,
    40.9187190121475,
    43.327073280915,
    48.00515088116716,
    49.7738324776723,
    52.970321477714464,
    56.44624769706339,
    59.34704400260235,
    60.83177852460981,
    65.1125440480816,
    67.07981052949417,
    69.54640171117398,
    72.0671576744819,
    75.70469069908393,
    77.1448400688748,
    79.33737502024937,
    82.91038085408603,
    84.73549298051705,
    87.42527461312523,
    88.80911120763446,
    92.49189927055849,
    94.65134404051989,
    95.87063422824531,
    98.83119421819369,
    101.31785100573138,
    103.72553804047834,
    105.44662305232609,
    107.16861118427641,
    111.02953554316967,
    111.87465917699264,
    114.32022091545271,
    116.22668032085755,
    118.79078286597621,
    121.37012500242065,
    122.94682929355258,
    124.25681855434577,
    127.5166838795965,
    129.57870419995606,
    131.08768853093267,
    133.4977372029976,
    134.75650975337388,
    138.11604205453344,
    139.7362089521214,
    141.12370740402113,
    143.11184580762063,
    146.0009824867655,
    147.42276534255961,
    150.05352042078488,
    150.92525761224147,
    153.0246938111989,
    156.11290929423788,
    157.59759181759406,
    158.8499881714205,
    161.18896413759603,
    163.030709687182,
    165.5370691879004,
    167.1844399781745,
    169.09451541556882,
    169.9119764794117,
    173.41153651959155,
    174.75419152336573,
    176.44143429771043,
    178.37740777609997,
    179.916484020257,
    182.20707848436646,
    184.8744678483875,
    185.59878367770747,
    187.22892258350186,
    189.41615865601693,
    192.0266563607138,
    193.0797266038457,
    195.26539667952923,
    196.87648184095832,
    198.01530967625192,
    201.2647519437038,
    202.49359451414054,
    204.18967180310455,
    205.3946972021633,
    207.90625888780622,
    209.57650971685626,
    211.6908625953653,
    213.34791935971268,
    214.54704478349143,
    216.1695385082637,
    219.0675963490214,
    220.714918839314,
    221.43070555469333,
    224.00700025460432,
    224.9833246695823,
    227.4214442796793,
    229.33741330552536,
    231.25018870049917,
    231.98723525318024,
    233.6934041789083,
    236.5242296658162,
    237.7698204809252,
    239.55547757332764,
    241.04915779621658,
    242.8232719342226,
    244.07089849707816,
    247.1369900748975,
    248.10199006014847,
    249.5736896447072,
    251.014947795016,
    253.06998674799948,
    255.30625645491403,
    256.38071369443446,
    258.6104394915314,
    259.874406989678,
    260.8050845045969,
    263.57389390487015,
    265.55785183887633,
    266.6149737815011,
    267.92191508282406,
    269.9704490239976,
    271.494055641645,
    273.4596091884033,
    275.58749264934386,
    276.4520495031329,
    278.25074352984194,
    279.22925092774517,
    282.4651147650521,
    283.2111857332339,
    284.83596398090475,
    286.6674453630029,
    287.9119205014222,
    289.5798549292188,
    291.8462913290674,
    293.5584341393563,
    294.9653696192655,
    295.57325487895827,
    297.97927706194344,
    299.8403260537213,
    301.64932546219416,
    302.6967495896069,
    304.8643713408573,
    305.7289126020368,
    307.2194961281701,
    310.1094631467019,
    311.165141530356,
    312.4278011806009,
    313.9852857311589,
    315.47561608947575,
    317.7348059423702,
    318.8531042563166,
    321.1601343091136,
    322.14455867248296,
    323.4669695575121,
    324.8628660517396,
    327.44390126190547,
    329.03307168048093,
    329.9532397282339,
    331.4744675826634,
    333.64537852486984,
    334.2113548332444,
    336.84185042839067,
    338.3399928508066,
    339.85821672536355,
    341.04226111104657,
    342.0548775103636,
    344.6617029402523,
    346.34787056600993,
    347.2726775844205,
    349.31626087069617,
    350.4084193491921,
    351.87864902535927,
    353.4889004887188,
    356.0175749772649,
    357.1513022520396,
    357.95268510163226,
    359.74375495311443,
    361.28936169580464,
    363.33133057897385,
    364.736024114089,
    366.2127102883313,
    367.9935754817403,
    368.96843809573437,
    370.050919212106,
    373.06192837211285,
    373.86487391090856,
    375.82591276673935,
    376.32409223066804,
    378.4366802499655,
    379.87297534653237,
    381.4844686171865,
    383.44352944953647,
    384.95611681486366,
    385.86130084597426,
    387.222890222388,
    388.84612835423223,
    391.45608356363806,
    392.2450833395191,
    393.427743844434,
    395.5828700109937,
    396.3818542225922,
    397.9187362096142,
    399.9851198761949,
    401.8392286005332,
    402.86191776388614,
    404.236441800208,
    405.13438745990993,
    407.5814603868962,
    408.9472455023511,
    410.51386919336665,
    411.9722678042788,
    413.26273607018504,
    415.01880975515513,
    415.4552149962946,
    418.3877057895348,
    419.8613648181523,
    420.6438276250418,
    422.07671005882673,
    423.7165796274818,
    425.06988249446135,
    427.2088250840746,
    428.12791407661666,
    430.3287454309386,
    431.3013069307036,
    432.1386417345886,
    433.88921848092724,
    436.16100643264696,
    437.5816981676686,
    438.6217386562722,
    439.91844221437066,
    441.68319920118904,
    442.90454630260945,
    444.31933627755916,
    446.8606226964295,
    447.4417041944933,
    449.1485456850233,
    450.1269457803135,
    451.4033084453888,
    453.9867378066779,
    454.9746837686168,
    456.32842668924604,
    457.903893064103,
    459.513415281106,
    460.08794442217584,
    462.06536727488253,
    464.05728691054827,
    465.6715392113711,
    466.5702869308262,
    467.43904621026167,
    469.53600455911203,
    470.77365547810166,
    472.7991746619088,
    473.8352323451397,
    475.6003393693758,
    476.7690152374845,
    478.07526376667096,
    478.9421815346348,
    481.8303393762866,
    482.8347827909824,
    483.8514272124825,
    485.539148129356,
    486.52871826165125,
    488.38056709001745,
    489.66176157795616,
    491.398821593663,
    493.3144415817853,
    493.9579978053695,
    495.3588288221313,
    496.4296962157591,
    498.58078242968656,
    500.3090849416905,
    501.6044469651455,
    502.27627032711825,
    504.49977331342774,
    505.41523174224443,
    506.46415270952355,
    508.8007003364678,
    510.26422794367284,
    511.5622897003746,
    512.6231445314074,
    513.6689855554737,
    515.4350571672994,
    517.5896685724674,
    518.2342231475501,
    520.1063104117233,
    521.525193449492,
    522.4566961777302,
    523.9605308920159,
    525.0773856872796,
    527.9036416012724,
    528.4062138522927,
    529.8062263187069,
    530.866917883961,
    532.6881830282937,
    533.7796307537687,
    535.6643140758732,
    537.0697590831223,
    538.4285261762479,
    540.2131663762282,
    540.6313902472951,
    541.8474371212013,
    544.3238901010053,
    545.6368332489349,
    547.0109120581222,
    547.9316133644893,
    549.4975675626614,
    550.9700100394839,
    552.0495722005649,
    553.7649721191589,
    555.7920205616825,
    556.8994764068553,
    557.5646591720586,
    559.3162370286822,
    560.2408074972957,
    562.5592076160458,
    564.1608791107861,
    564.5060559381499,
    566.698787682808,
    567.7317579011769,
    568.9239551796294,
    570.0511147824636,
    572.4199841324528,
    573.6146105267582,
    575.0938860144948,
    575.8072471409288,
    577.0390034720982,
    579.0988346720366,
    580.1369593623846,
    581.9465762659016,
    583.2360882191673,
    584.5617059034655,
    585.9845632049883,
    586.7427718912502,
    588.1396632662479,
    590.6603975167653,
    591.7258580650481,
    592.5713583002256,
    593.974714682231,
    595.728153697389,
    596.3627683283937,
    598.4930773461648,
    599.5456403643649,
    601.6021367359326,
    602.5791678863874,
    603.6256189035792,
    604.6162184937532,
    606.383460422109,
    608.4132173111873,
    609.3895751547201,
    610.8391629377394,
    611.7742096208872,
    613.5997786756371,
    614.6462378722326,
    615.538563369407,
    618.1128313664424,
    619.1844825979537,
    620.2728936722275,
    621.7092945279486,
    622.375002739779,
    624.2699000181779,
    626.0192834276544,
    627.268396850783,
    628.3258623594604,
    630.4738874382921,
    630.8057809271976,
    632.2251411671159,
    633.5468582522518,
    635.5238003106055,
    637.3971931598373,
    637.9255139808225,
    638.9279382668568,
    640.6947946688257,
    641.9454996657053,
    643.2788837813979,
    644.990578229748,
    646.3481915955016,
    647.7617530042888,
    648.7864008887824,
    650.1975193452564,
    650.668683891396,
    653.6495716053947,
    654.3019205863194,
    655.7094630223556,
    656.9640845994606,
    658.1756144186054,
    659.663845972964,
    660.7167325952793,
    662.2965864311004,
    664.244604652273,
    665.342763095599,
    666.5151477041729,
    667.1484948945555,
    668.9758488202351,
    670.3235852058626,
    672.4581835841698,
    673.0435782861476,
    674.3558978101232,
    676.1396743636268,
    677.230180668764,
    677.8004447462214,
    679.7421978825282,
    681.8949915331519,
    682.6027350197505,
    684.0135498138695,
    684.9726298620984,
    686.163223587728,
    687.9615431847036,
    689.3689413622724,
    690.4747350323504,
    692.4516844155208,
    693.1769700606018,
    694.5339086998731,
    695.7263359209268,
    696.6260699003457,
    699.1320954760135,
    700.2967391321434,
    701.3017429546461,
    702.2273431457605,
    704.0338392955254,
    705.1258139546193,
    706.184654799518,
    708.26907088511,
    709.2295885702842,
    711.1302741796854,
    711.9002899143753,
    712.7493834701013,
    714.0827718206693,
    716.1123964540521,
    717.4825697031002,
    718.7427865454858,
    719.6971009883657,
    721.3511622185364,
    722.2775049756742,
    723.8458210451284,
    724.5626138903791,
    727.0564032300493,
    728.4054815889341,
    728.7587497956142,
    730.4164821227564,
    731.4173549185986,
    732.8180527144998,
    734.789643252378,
    735.7654592085784,
    737.0529289122653,
    738.5804211713738,
    739.9095236740419,
    740.573807447295,
    741.7573355729417,
    743.8950131424737,
    745.3449895506119,
    746.4993058994323,
    747.6745636242696,
    748.2427544650845,
    750.6559503621243,
    750.9663810666508,
    752.8876215672024,
    754.3223704717127,
    755.8393089760378,
    756.768248439951,
    758.1017292464126,
    758.9002382248924,
    760.282366983512,
    762.700033249691,
    763.5930661728372,
    764.3075227241802,
    766.0875400998362,
    767.2184721555395,
    768.2814618065092,
    769.6934072526244,
    771.0708393136783,
    772.961617565757,
    774.1177446279405,
    775.0478470965805,
    775.9997119631714,
    777.2997485295925,
    779.157076949189,
    780.3489250041816,
    782.1376643908121,
    782.5979439460735,
    784.2888226124655,
    785.739089700715,
    786.4611474505062,
    787.46846381591,
    790.0590923641196,
    790.8316204679211,
    792.4277076086046,
    792.8886525626226,
    794.4837918698931,
    795.6065961561624,
    797.2634700380356,
    798.7075701662963,
    799.6543362108977,
    801.604246462982,
    802.5419848784181,
    803.2430962042702,
    804.7622391126617,
    805.8616356670948,
    808.1518149359938,
    809.1977833633007,
    810.0818048864071,
    811.1843588465063,
];
