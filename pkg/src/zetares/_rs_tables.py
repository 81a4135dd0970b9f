"""Chebyshev tables for the Riemann-Siegel correction terms.

Generated by scripts/gen_rs_correction_tables.py; do not edit.
Each row of CHEB holds the Chebyshev coefficients (domain z in
[-1, 1]) of one correction term C_0..C_6.
"""

import numpy as np

NUM_TERMS = 7

CHEB = np.array([
    [  # C_0
        np.float64(0.642667286239768), np.float64(-3.5115085639523436e-16), np.float64(0.27197299999785496), np.float64(9.677089317632147e-17),
        np.float64(0.01073860581934007), np.float64(2.754124363884191e-17), np.float64(-0.001374381529633813), np.float64(-5.508248727768382e-17),
        np.float64(-0.00012468221880324458), np.float64(7.573842000681523e-17), np.float64(-5.764599706321342e-07), np.float64(-1.3082090728449904e-16),
        np.float64(2.7280674295447887e-07), np.float64(-6.196779818739429e-17), np.float64(8.077953079607617e-09), np.float64(-1.0930431069165383e-16),
        np.float64(-2.0884607223216203e-10), np.float64(3.442655454855238e-17), np.float64(-1.311562219258019e-11), np.float64(1.4459152910392e-16),
        np.float64(-1.4202675079005281e-14), np.float64(4.64758486405457e-17), np.float64(1.042436071730166e-14), np.float64(6.196779818739426e-17),
        np.float64(1.9967401638160358e-16), np.float64(9.295169728109138e-17), np.float64(1.7729675592504476e-16), np.float64(-1.7385410047018943e-16),
        np.float64(-4.088153352640593e-17), np.float64(-7.229576455195996e-17), np.float64(-1.53198167741058e-16), np.float64(7.100476875638927e-17),
        np.float64(1.411488736490647e-16), np.float64(-1.30820907284499e-16), np.float64(1.1188630228279522e-16), np.float64(1.4459152910392e-16),
        np.float64(9.209103341737763e-17), np.float64(3.7869210003407614e-17), np.float64(-1.204929409199333e-17), np.float64(6.368912591482189e-17),
        np.float64(-3.098389909369714e-17), np.float64(9.639435273594661e-17), np.float64(-8.262373091652571e-17), np.float64(1.0155833591822947e-16),
        np.float64(-2.0828065501874174e-16), np.float64(-1.6524746183305135e-16), np.float64(-6.885310909710471e-18), np.float64(-1.3770621819420949e-17),
        np.float64(-1.377062181942094e-16), np.float64(-4.131186545826284e-17), np.float64(-8.950904182623608e-17), np.float64(-2.8574040275298455e-16),
        np.float64(5.5082487277683795e-17), np.float64(-2.0655932729131418e-17), np.float64(-2.754124363884189e-17), np.float64(-2.2032994911073528e-16),
        np.float64(-1.3770621819420958e-17), np.float64(-2.444285372947221e-16), np.float64(1.3082090728449906e-16), np.float64(1.054313233049417e-16),
        np.float64(7.573842000681525e-17), np.float64(2.7541243638841903e-17), np.float64(8.262373091652571e-17), np.float64(-7.57384200068152e-17),
        np.float64(-8.950904182623617e-17),
    ],
    [  # C_1
        np.float64(7.664846994574442e-18), np.float64(0.010697913921002982), np.float64(7.745974773424286e-18), np.float64(0.01717065124337791),
        np.float64(-1.8934605001703813e-17), np.float64(0.0027932111497884636), np.float64(-3.227489488926786e-18), np.float64(-3.6375653719277796e-05),
        np.float64(-1.0758298296422621e-19), np.float64(-2.7108955231152856e-05), np.float64(-1.3985787785349403e-18), np.float64(-1.0483749866907857e-06),
        np.float64(-1.0327966364565714e-17), np.float64(5.886467165533216e-08), np.float64(-7.853557756388513e-18), np.float64(4.32296726458859e-09),
        np.float64(-1.237204304088601e-18), np.float64(-1.1369585666289216e-11), np.float64(1.2741859544825536e-18), np.float64(-6.699832683096968e-12),
        np.float64(6.885310909710474e-18), np.float64(-1.0078890242406935e-13), np.float64(-6.454978977853571e-18), np.float64(5.162692186487285e-15),
        np.float64(5.594315114139755e-18), np.float64(1.5879248285519777e-16), np.float64(-8.606638637138095e-19), np.float64(-1.2049294091993327e-17),
        np.float64(-7.315642841567378e-18), np.float64(-1.89346050017038e-17), np.float64(5.379149148211307e-18), np.float64(-1.4200953751277852e-17),
        np.float64(3.516618755643142e-18), np.float64(-1.6675362359455053e-17), np.float64(2.5819915911414277e-18), np.float64(-4.733651250425952e-18),
        np.float64(1.1645857905877487e-17), np.float64(0.0), np.float64(1.463128568313476e-17), np.float64(-7.745974773424283e-18),
        np.float64(9.897634432708809e-18), np.float64(-1.5491949546848563e-17), np.float64(2.7971575570698806e-18), np.float64(-9.4673025008519e-18),
        np.float64(-6.454978977853567e-18), np.float64(2.7971575570698795e-18), np.float64(3.4426554548552356e-18), np.float64(1.764360920613309e-17),
        np.float64(2.7971575570698783e-18), np.float64(8.821804603066545e-18), np.float64(-2.2753800896933814e-17), np.float64(1.8073941137989988e-17),
        np.float64(-7.100476875638926e-18), np.float64(1.2049294091993327e-17), np.float64(2.1516596592845226e-18), np.float64(1.0327966364565715e-17),
        np.float64(-5.3657012753407834e-18), np.float64(1.1618962160136438e-17), np.float64(-2.9854277772572773e-18), np.float64(1.828910710391846e-17),
        np.float64(4.733651250425953e-18), np.float64(1.8033597519378414e-17), np.float64(5.701898097103988e-18), np.float64(1.6782945342419277e-17),
        np.float64(1.0758298296422616e-17),
    ],
    [  # C_2
        np.float64(0.0031461158539889096), np.float64(1.022038338160149e-18), np.float64(-0.0023087838845307503), np.float64(-1.0774057522442771e-18),
        np.float64(5.769820766689874e-05), np.float64(-2.1516596592845242e-19), np.float64(0.00035238862023665953), np.float64(-1.0758298296422621e-19),
        np.float64(2.5246667458682815e-05), np.float64(-3.7654044037479165e-19), np.float64(-3.4428211971927678e-06), np.float64(-5.379149148211309e-20),
        np.float64(-3.5350745566193367e-07), np.float64(4.572276775979614e-19), np.float64(3.730830184078229e-09), np.float64(3.7317847215715966e-19),
        np.float64(1.2776951853533823e-09), np.float64(-9.682468466780356e-19), np.float64(2.1874616353745275e-11), np.float64(-1.2909957955707142e-18),
        np.float64(-1.914140840788772e-12), np.float64(-1.5599532529812793e-18), np.float64(-6.563040705091988e-14), np.float64(-3.2274894889267846e-19),
        np.float64(1.258290568749588e-15), np.float64(-9.144553551959222e-19), np.float64(8.187065003577613e-17), np.float64(1.210308558347544e-18),
        np.float64(-9.07731418760658e-20), np.float64(7.530808807495829e-19), np.float64(-2.4038072756069275e-19), np.float64(-4.706755504684895e-19),
        np.float64(-1.748223473168675e-18), np.float64(1.2909957955707138e-18), np.float64(-8.875596094548658e-19), np.float64(-8.87559609454866e-19),
        np.float64(-4.458810348634531e-19), np.float64(-8.337681179727529e-19), np.float64(-1.8827022018739578e-19), np.float64(-1.9364936933560708e-18),
        np.float64(-4.3033193185690474e-19), np.float64(-1.1834128126064876e-18), np.float64(1.0758298296422619e-19), np.float64(-1.359916144032171e-18),
        np.float64(1.425474524275996e-18), np.float64(1.5061617614991658e-18), np.float64(0.0), np.float64(-3.7654044037479155e-19),
        np.float64(9.682468466780348e-19), np.float64(0.0), np.float64(5.917064063032434e-19), np.float64(1.6137447444633917e-18),
        np.float64(-4.3033193185690464e-19), np.float64(5.917064063032438e-19), np.float64(2.420617116695088e-19), np.float64(1.317891541311771e-18),
        np.float64(-1.0758298296422623e-19), np.float64(2.0171809305792427e-18), np.float64(-5.37914914821131e-19), np.float64(-1.25065217695913e-18),
        np.float64(0.0), np.float64(-6.186021520443005e-19), np.float64(-1.0758298296422619e-18), np.float64(-1.0758298296422614e-19),
        np.float64(1.1296213211243746e-18),
    ],
    [  # C_3
        np.float64(4.730852262532549e-20), np.float64(7.12325622120385e-05), np.float64(5.547247559092913e-20), np.float64(0.00023234305298164843),
        np.float64(-8.741117365843379e-20), np.float64(-0.0001292991204547251), np.float64(-1.412026651405469e-19), np.float64(1.8074496413671474e-05),
        np.float64(-7.564428489672154e-21), np.float64(6.526185187220573e-06), np.float64(3.698165039395275e-20), np.float64(-1.1696365378529441e-07),
        np.float64(-1.6137447444633928e-19), np.float64(-7.349476126530905e-08), np.float64(2.0171809305792413e-20), np.float64(-1.7750910076661714e-09),
        np.float64(-2.6223352097530134e-19), np.float64(2.555552961595104e-10), np.float64(1.6599718074558333e-20), np.float64(1.137663659783923e-11),
        np.float64(-2.689574574105654e-20), np.float64(-3.349862442474018e-13), np.float64(-3.572091231234072e-20), np.float64(-2.5537335758785868e-14),
        np.float64(1.3447872870528259e-19), np.float64(6.772012580776272e-17), np.float64(-4.7067555046848956e-20), np.float64(2.9827382026831694e-17),
        np.float64(0.0), np.float64(1.51288569793443e-19), np.float64(-1.3447872870528267e-20), np.float64(-1.0085904652896202e-19),
        np.float64(-4.3705586829216867e-20), np.float64(2.689574574105654e-20), np.float64(3.0257713958688606e-20), np.float64(-3.698165039395275e-20),
        np.float64(5.715345969974518e-20), np.float64(-1.3447872870528273e-20), np.float64(1.790248075889076e-19), np.float64(-1.0422101474659409e-19),
        np.float64(1.4120266514054687e-19), np.float64(-1.6809841088160335e-19), np.float64(8.068723722316964e-20), np.float64(-1.4792660157581094e-19),
        np.float64(-8.741117365843372e-20), np.float64(6.303690408060125e-20), np.float64(-5.3791491482113057e-20), np.float64(1.4120266514054683e-19),
        np.float64(6.093567394458118e-21), np.float64(8.404920544080169e-20), np.float64(-1.4792660157581085e-19), np.float64(1.9667514073147586e-19),
        np.float64(5.379149148211308e-20), np.float64(7.144182462468142e-21), np.float64(1.3447872870528267e-20), np.float64(8.068723722316965e-20),
        np.float64(-8.404920544080175e-20), np.float64(1.1766888761712248e-19), np.float64(-4.202460272040086e-20), np.float64(1.4288364924936296e-19),
        np.float64(9.077314187606586e-20), np.float64(1.6473644266397134e-19), np.float64(1.5128856979344308e-19), np.float64(2.218899023637164e-19),
        np.float64(1.0085904652896202e-19),
    ],
    [  # C_4
        np.float64(0.00016765745246567133), np.float64(-1.4471612364606547e-14), np.float64(-0.000227287689435269), np.float64(1.2981589547678487e-15),
        np.float64(6.477387189202498e-05), np.float64(-7.02106718633846e-16), np.float64(-8.49220050285561e-06), np.float64(2.695357159439982e-16),
        np.float64(-2.616140723918457e-06), np.float64(-7.152923579833989e-17), np.float64(8.336764967813969e-07), np.float64(1.678966927885455e-17),
        np.float64(6.324704037798646e-08), np.float64(-2.7366421291525043e-18), np.float64(-1.0059949399972917e-08), np.float64(2.4206171166950894e-19),
        np.float64(-7.822677213745813e-10), np.float64(0.0), np.float64(3.167658292143028e-11), np.float64(-8.068723722316964e-20),
        np.float64(3.5006944687503955e-12), np.float64(-1.243928240523865e-19), np.float64(-1.431501524699746e-14), np.float64(-2.0171809305792404e-20),
        np.float64(-7.26940401168617e-15), np.float64(-1.2943577637883456e-19), np.float64(-8.78011619716791e-17), np.float64(6.219641202619323e-20),
        np.float64(8.154453911866579e-18), np.float64(9.749707831132994e-20), np.float64(1.8322726786094763e-19), np.float64(-3.193869806750464e-20),
        np.float64(-1.412026651405468e-19), np.float64(1.3615971281409873e-19), np.float64(-9.245412598488186e-20), np.float64(-1.1430691939949033e-19),
        np.float64(-5.715345969974518e-20), np.float64(-8.404920544080171e-20), np.float64(-3.0257713958688606e-20), np.float64(-1.1262593529067426e-19),
        np.float64(-4.7067555046848956e-20), np.float64(-7.396330078790547e-20), np.float64(-4.7067555046848956e-20), np.float64(-1.5801250622870715e-19),
        np.float64(1.7061988704482734e-19), np.float64(4.03436186115848e-20), np.float64(4.370558682921686e-20), np.float64(-2.0171809305792404e-20),
        np.float64(-1.3447872870528261e-20), np.float64(2.689574574105654e-20), np.float64(3.3619682176320647e-20), np.float64(1.0758298296422611e-19),
        np.float64(-2.3533777523424472e-20), np.float64(-2.6895745741056534e-20), np.float64(6.05154279173772e-20), np.float64(1.8154628375213173e-19),
        np.float64(6.723936435264139e-20), np.float64(1.849082519697639e-19), np.float64(-7.396330078790552e-20), np.float64(-8.404920544080175e-20),
        np.float64(-6.723936435264138e-21), np.float64(-1.0085904652896204e-19), np.float64(-2.521476163224051e-20), np.float64(3.3619682176320665e-20),
        np.float64(1.2103085583475442e-19),
    ],
    [  # C_5
        np.float64(1.8036327180179083e-13), np.float64(8.828845395323056e-05), np.float64(1.5297394547324343e-13), np.float64(-1.562868512375223e-05),
        np.float64(-8.580045871972813e-13), np.float64(-1.8342440717736678e-07), np.float64(3.0979112323348883e-13), np.float64(2.1097267611548396e-06),
        np.float64(-6.867753366890716e-14), np.float64(-6.657016103410923e-07), np.float64(1.0504973991224042e-14), np.float64(2.7714739493517718e-08),
        np.float64(-3.161208285516169e-16), np.float64(1.8111249678458213e-08), np.float64(-3.476485260045161e-16), np.float64(-5.765891062291696e-10),
        np.float64(9.649479153644841e-17), np.float64(-1.8675033720820018e-10), np.float64(-9.623634022971793e-18), np.float64(-1.1051498948675132e-13),
        np.float64(-5.311909783858667e-19), np.float64(7.870642808194965e-13), np.float64(1.623200280075483e-19), np.float64(1.4458389743606592e-14),
        np.float64(-3.3619682176320645e-21), np.float64(-1.5814538802250904e-15), np.float64(-7.501391585591552e-20), np.float64(-4.9167104198760157e-17),
        np.float64(-2.1852793414608433e-20), np.float64(1.6217819497336688e-18), np.float64(5.883444380856117e-20), np.float64(4.874853915566498e-20),
        np.float64(9.660405550352142e-20), np.float64(-1.1766888761712236e-19), np.float64(3.2779190121912656e-20), np.float64(-4.6647309019644946e-20),
        np.float64(8.573018954961776e-20), np.float64(2.5214761632240512e-21), np.float64(2.0171809305792404e-20), np.float64(-1.0663742940301714e-19),
        np.float64(5.547247559092912e-20), np.float64(-1.210308558347544e-19), np.float64(0.0), np.float64(-1.0674249090981812e-19),
        np.float64(2.5214761632240493e-21), np.float64(-1.0422101474659407e-19), np.float64(5.883444380856116e-20), np.float64(9.581609420251392e-20),
        np.float64(-9.749707831132989e-20), np.float64(4.685743203324694e-20), np.float64(-1.1766888761712225e-20), np.float64(-6.639887229823331e-20),
        np.float64(2.3533777523424472e-20), np.float64(1.6809841088160332e-20), np.float64(7.816576105994555e-20), np.float64(6.303690408060129e-21),
        np.float64(6.104073545138227e-20), np.float64(2.647549971385256e-20), np.float64(8.152772927757767e-20), np.float64(6.408751914861132e-20),
        np.float64(5.904456682216321e-20), np.float64(3.95031265571768e-20), np.float64(1.0001855447455403e-19), np.float64(7.725303921961185e-20),
        np.float64(6.723936435264135e-21),
    ],
    [  # C_6
        np.float64(1.2189732554929285e-05), np.float64(-6.890022465937678e-11), np.float64(-1.3829768220437455e-05), np.float64(7.069318256523719e-12),
        np.float64(5.111005402792253e-06), np.float64(-2.6362772814453835e-12), np.float64(-2.0458274022077836e-06), np.float64(9.724004172082551e-13),
        np.float64(4.938167213864485e-07), np.float64(-2.6517063180607285e-13), np.float64(-3.618799755554052e-08), np.float64(6.669106599898007e-14),
        np.float64(-1.2876890120638638e-08), np.float64(-1.251842523831185e-14), np.float64(2.574427316492192e-09), np.float64(1.2284476376197514e-15),
        np.float64(1.3641031614478057e-10), np.float64(7.245966050256956e-17), np.float64(-3.032396973595384e-11), np.float64(-3.8226839372558226e-17),
        np.float64(-1.3216456803903902e-12), np.float64(3.3348623488774088e-18), np.float64(1.3030872340355457e-13), np.float64(2.0150797004432204e-19),
        np.float64(6.636050015879681e-15), np.float64(-4.570175545843591e-20), np.float64(-2.459472013755304e-16), np.float64(4.2024602720400835e-22),
        np.float64(-1.6818666254731617e-17), np.float64(4.622706299244092e-21), np.float64(1.8543355950376868e-19), np.float64(-3.414498971032569e-21),
        np.float64(1.9016132730981378e-20), np.float64(8.221062907178415e-21), np.float64(-2.941722190428059e-21), np.float64(-1.0296027666498209e-20),
        np.float64(-3.782214244836077e-21), np.float64(-6.802732565364889e-21), np.float64(-1.1556765748110232e-21), np.float64(-6.723936435264135e-21),
        np.float64(-2.9417221904280598e-21), np.float64(-6.3036904080601254e-21), np.float64(-3.7822142448360765e-21), np.float64(-7.56442848967215e-21),
        np.float64(1.0506150680100206e-20), np.float64(3.3619682176320668e-21), np.float64(5.935975134256616e-21), np.float64(-2.5214761632240505e-21),
        np.float64(-3.3619682176320653e-21), np.float64(-2.5214761632240505e-21), np.float64(6.723936435264129e-21), np.float64(7.249243969269142e-21),
        np.float64(2.1012301360200422e-22), np.float64(-8.404920544080167e-22), np.float64(5.0429523264481e-21), np.float64(1.4288364924936294e-20),
        np.float64(3.3619682176320698e-21), np.float64(1.2607380816120267e-20), np.float64(4.2024602720400863e-22), np.float64(-2.7315991768260568e-21),
        np.float64(-4.2024602720400863e-22), np.float64(-4.202460272040085e-21), np.float64(-7.87961301007516e-22), np.float64(3.3619682176320668e-21),
        np.float64(8.615043557682173e-21),
    ],
])
CHEB.setflags(write=False)
