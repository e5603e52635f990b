"""Frozen wavelet filter-bank tables.

Generated by tools/gen_filter_tables.py -- do not edit by hand.
Layout: name -> (orthogonal, dec_lo, dec_hi, rec_lo, rec_hi).
"""

TAPS = {
    'haar': (True,
        [0.7071067811865476, 0.7071067811865476],
        [0.7071067811865476, -0.7071067811865476],
        [0.7071067811865476, 0.7071067811865476],
        [-0.7071067811865476, 0.7071067811865476],
    ),
    'db1': (True,
        [0.7071067811865476, 0.7071067811865476],
        [0.7071067811865476, -0.7071067811865476],
        [0.7071067811865476, 0.7071067811865476],
        [-0.7071067811865476, 0.7071067811865476],
    ),
    'db4': (True,
        [-0.010597401785069013, 0.032883011666885266, 0.03084138183556072, -0.18703481171909314, -0.027983769416859677, 0.630880767929859, 0.7148465705529156, 0.23037781330889637],
        [0.23037781330889637, -0.7148465705529156, 0.630880767929859, 0.027983769416859677, -0.18703481171909314, -0.03084138183556072, 0.032883011666885266, 0.010597401785069013],
        [0.23037781330889637, 0.7148465705529156, 0.630880767929859, -0.027983769416859677, -0.18703481171909314, 0.03084138183556072, 0.032883011666885266, -0.010597401785069013],
        [0.010597401785069013, 0.032883011666885266, -0.03084138183556072, -0.18703481171909314, 0.027983769416859677, 0.630880767929859, -0.7148465705529156, 0.23037781330889637],
    ),
    'db8': (True,
        [-0.00011747678412470588, 0.0006754494064505178, -0.0003917403733769134, -0.004870352993451521, 0.008746094047405725, 0.013981027917398269, -0.04408825393079455, -0.017369301001807808, 0.1287474266204788, 0.0004724845739129215, -0.2840155429615469, -0.015829105256348754, 0.585354683654207, 0.6756307362972898, 0.3128715909142998, 0.054415842243103786],
        [0.054415842243103786, -0.3128715909142998, 0.6756307362972898, -0.585354683654207, -0.015829105256348754, 0.2840155429615469, 0.0004724845739129215, -0.1287474266204788, -0.017369301001807808, 0.04408825393079455, 0.013981027917398269, -0.008746094047405725, -0.004870352993451521, 0.0003917403733769134, 0.0006754494064505178, 0.00011747678412470588],
        [0.054415842243103786, 0.3128715909142998, 0.6756307362972898, 0.585354683654207, -0.015829105256348754, -0.2840155429615469, 0.0004724845739129215, 0.1287474266204788, -0.017369301001807808, -0.04408825393079455, 0.013981027917398269, 0.008746094047405725, -0.004870352993451521, -0.0003917403733769134, 0.0006754494064505178, -0.00011747678412470588],
        [0.00011747678412470588, 0.0006754494064505178, 0.0003917403733769134, -0.004870352993451521, -0.008746094047405725, 0.013981027917398269, 0.04408825393079455, -0.017369301001807808, -0.1287474266204788, 0.0004724845739129215, 0.2840155429615469, -0.015829105256348754, -0.585354683654207, 0.6756307362972898, -0.3128715909142998, 0.054415842243103786],
    ),
    'db16': (True,
        [-2.109339611899784e-08, 2.3087840800394144e-07, -7.363656773627792e-07, -1.043571343211195e-06, 1.1336608661167342e-05, -1.394566898755229e-05, -6.103596621424963e-05, 0.00017478724522494943, 0.0001142415200388922, -0.0009410217493593243, 0.0004078969808493817, 0.0031280233812066844, -0.003644279621498795, -0.006990014563414839, 0.013993768859833867, 0.010297659640944288, -0.036888397691712496, -0.00758897436888071, 0.07592423604430991, -0.0062397227525259015, -0.1323883055637467, 0.027340263752654876, 0.21119069394715237, -0.027918208133057863, -0.32706331052790777, -0.08975108940249413, 0.44029025688636003, 0.6373563320837867, 0.4303127228460023, 0.1650642834888541, 0.03490771432367618, 0.0031892209253484693],
        [0.0031892209253484693, -0.03490771432367618, 0.1650642834888541, -0.4303127228460023, 0.6373563320837867, -0.44029025688636003, -0.08975108940249413, 0.32706331052790777, -0.027918208133057863, -0.21119069394715237, 0.027340263752654876, 0.1323883055637467, -0.0062397227525259015, -0.07592423604430991, -0.00758897436888071, 0.036888397691712496, 0.010297659640944288, -0.013993768859833867, -0.006990014563414839, 0.003644279621498795, 0.0031280233812066844, -0.0004078969808493817, -0.0009410217493593243, -0.0001142415200388922, 0.00017478724522494943, 6.103596621424963e-05, -1.394566898755229e-05, -1.1336608661167342e-05, -1.043571343211195e-06, 7.363656773627792e-07, 2.3087840800394144e-07, 2.109339611899784e-08],
        [0.0031892209253484693, 0.03490771432367618, 0.1650642834888541, 0.4303127228460023, 0.6373563320837867, 0.44029025688636003, -0.08975108940249413, -0.32706331052790777, -0.027918208133057863, 0.21119069394715237, 0.027340263752654876, -0.1323883055637467, -0.0062397227525259015, 0.07592423604430991, -0.00758897436888071, -0.036888397691712496, 0.010297659640944288, 0.013993768859833867, -0.006990014563414839, -0.003644279621498795, 0.0031280233812066844, 0.0004078969808493817, -0.0009410217493593243, 0.0001142415200388922, 0.00017478724522494943, -6.103596621424963e-05, -1.394566898755229e-05, 1.1336608661167342e-05, -1.043571343211195e-06, -7.363656773627792e-07, 2.3087840800394144e-07, -2.109339611899784e-08],
        [2.109339611899784e-08, 2.3087840800394144e-07, 7.363656773627792e-07, -1.043571343211195e-06, -1.1336608661167342e-05, -1.394566898755229e-05, 6.103596621424963e-05, 0.00017478724522494943, -0.0001142415200388922, -0.0009410217493593243, -0.0004078969808493817, 0.0031280233812066844, 0.003644279621498795, -0.006990014563414839, -0.013993768859833867, 0.010297659640944288, 0.036888397691712496, -0.00758897436888071, -0.07592423604430991, -0.0062397227525259015, 0.1323883055637467, 0.027340263752654876, -0.21119069394715237, -0.027918208133057863, 0.32706331052790777, -0.08975108940249413, -0.44029025688636003, 0.6373563320837867, -0.4303127228460023, 0.1650642834888541, -0.03490771432367618, 0.0031892209253484693],
    ),
    'sym2': (True,
        [-0.1294095225512603, 0.22414386804201336, 0.8365163037378078, 0.4829629131445342],
        [0.4829629131445342, -0.8365163037378078, 0.22414386804201336, 0.1294095225512603],
        [0.4829629131445342, 0.8365163037378078, 0.22414386804201336, -0.1294095225512603],
        [0.1294095225512603, 0.22414386804201336, -0.8365163037378078, 0.4829629131445342],
    ),
    'sym4': (True,
        [-0.07576571478950216, -0.029635527646002455, 0.4976186676327747, 0.8037387518051322, 0.29785779560530634, -0.09921954357663341, -0.012603967262031768, 0.03222310060405179],
        [0.03222310060405179, 0.012603967262031768, -0.09921954357663341, -0.29785779560530634, 0.8037387518051322, -0.4976186676327747, -0.029635527646002455, 0.07576571478950216],
        [0.03222310060405179, -0.012603967262031768, -0.09921954357663341, 0.29785779560530634, 0.8037387518051322, 0.4976186676327747, -0.029635527646002455, -0.07576571478950216],
        [0.07576571478950216, -0.029635527646002455, -0.4976186676327747, 0.8037387518051322, -0.29785779560530634, -0.09921954357663341, 0.012603967262031768, 0.03222310060405179],
    ),
    'sym8': (True,
        [-0.003382415951024876, -0.0005421323317773966, 0.03169508781151926, 0.0076074873249369545, -0.1432942383512694, -0.061273359067834245, 0.4813596512590529, 0.7771857516996278, 0.3644418948361801, -0.051945838107881365, -0.027219029917064052, 0.04913717967373554, 0.0038087520139127224, -0.01495225833708143, -0.0003029205147080765, 0.0018899503327705674],
        [0.0018899503327705674, 0.0003029205147080765, -0.01495225833708143, -0.0038087520139127224, 0.04913717967373554, 0.027219029917064052, -0.051945838107881365, -0.3644418948361801, 0.7771857516996278, -0.4813596512590529, -0.061273359067834245, 0.1432942383512694, 0.0076074873249369545, -0.03169508781151926, -0.0005421323317773966, 0.003382415951024876],
        [0.0018899503327705674, -0.0003029205147080765, -0.01495225833708143, 0.0038087520139127224, 0.04913717967373554, -0.027219029917064052, -0.051945838107881365, 0.3644418948361801, 0.7771857516996278, 0.4813596512590529, -0.061273359067834245, -0.1432942383512694, 0.0076074873249369545, 0.03169508781151926, -0.0005421323317773966, -0.003382415951024876],
        [0.003382415951024876, -0.0005421323317773966, -0.03169508781151926, 0.0076074873249369545, 0.1432942383512694, -0.061273359067834245, -0.4813596512590529, 0.7771857516996278, -0.3644418948361801, -0.051945838107881365, 0.027219029917064052, 0.04913717967373554, -0.0038087520139127224, -0.01495225833708143, 0.0003029205147080765, 0.0018899503327705674],
    ),
    'sym20': (True,
        [-5.795947438608128e-07, -2.961361931586859e-07, 1.0343024659941722e-05, -7.204450199154259e-07, -0.00010525792528673442, 2.7603760326007534e-05, 0.0007086428495266357, -0.00023042454599997027, -0.003538515477692045, 0.0010879251785516216, 0.014330696940518306, -0.0012078563191838204, -0.043406953155655285, -0.001978334110465322, 0.12217192822469498, 0.07295303183980163, -0.1763270791981092, -0.1354747941733386, 0.38246762370112547, 0.7384182840325898, 0.4778523084540877, 0.057017772685791605, -0.04189060574619168, 0.012024674975785868, -0.019249087257360086, -0.04891435895328112, -0.0097101276227874, 0.016410678252901118, 0.003638742997061551, -0.004284308673644545, 0.00039383854687718696, 0.0016961237548888766, -0.00026956608961068443, -0.0005235823904720877, 3.007311329119908e-05, 9.424126357627018e-05, 5.615946887382225e-07, -9.282364102626755e-06, -2.0618829521310029e-07, 4.0354978388623246e-07],
        [4.0354978388623246e-07, 2.0618829521310029e-07, -9.282364102626755e-06, -5.615946887382225e-07, 9.424126357627018e-05, -3.007311329119908e-05, -0.0005235823904720877, 0.00026956608961068443, 0.0016961237548888766, -0.00039383854687718696, -0.004284308673644545, -0.003638742997061551, 0.016410678252901118, 0.0097101276227874, -0.04891435895328112, 0.019249087257360086, 0.012024674975785868, 0.04189060574619168, 0.057017772685791605, -0.4778523084540877, 0.7384182840325898, -0.38246762370112547, -0.1354747941733386, 0.1763270791981092, 0.07295303183980163, -0.12217192822469498, -0.001978334110465322, 0.043406953155655285, -0.0012078563191838204, -0.014330696940518306, 0.0010879251785516216, 0.003538515477692045, -0.00023042454599997027, -0.0007086428495266357, 2.7603760326007534e-05, 0.00010525792528673442, -7.204450199154259e-07, -1.0343024659941722e-05, -2.961361931586859e-07, 5.795947438608128e-07],
        [4.0354978388623246e-07, -2.0618829521310029e-07, -9.282364102626755e-06, 5.615946887382225e-07, 9.424126357627018e-05, 3.007311329119908e-05, -0.0005235823904720877, -0.00026956608961068443, 0.0016961237548888766, 0.00039383854687718696, -0.004284308673644545, 0.003638742997061551, 0.016410678252901118, -0.0097101276227874, -0.04891435895328112, -0.019249087257360086, 0.012024674975785868, -0.04189060574619168, 0.057017772685791605, 0.4778523084540877, 0.7384182840325898, 0.38246762370112547, -0.1354747941733386, -0.1763270791981092, 0.07295303183980163, 0.12217192822469498, -0.001978334110465322, -0.043406953155655285, -0.0012078563191838204, 0.014330696940518306, 0.0010879251785516216, -0.003538515477692045, -0.00023042454599997027, 0.0007086428495266357, 2.7603760326007534e-05, -0.00010525792528673442, -7.204450199154259e-07, 1.0343024659941722e-05, -2.961361931586859e-07, -5.795947438608128e-07],
        [5.795947438608128e-07, -2.961361931586859e-07, -1.0343024659941722e-05, -7.204450199154259e-07, 0.00010525792528673442, 2.7603760326007534e-05, -0.0007086428495266357, -0.00023042454599997027, 0.003538515477692045, 0.0010879251785516216, -0.014330696940518306, -0.0012078563191838204, 0.043406953155655285, -0.001978334110465322, -0.12217192822469498, 0.07295303183980163, 0.1763270791981092, -0.1354747941733386, -0.38246762370112547, 0.7384182840325898, -0.4778523084540877, 0.057017772685791605, 0.04189060574619168, 0.012024674975785868, 0.019249087257360086, -0.04891435895328112, 0.0097101276227874, 0.016410678252901118, -0.003638742997061551, -0.004284308673644545, -0.00039383854687718696, 0.0016961237548888766, 0.00026956608961068443, -0.0005235823904720877, -3.007311329119908e-05, 9.424126357627018e-05, -5.615946887382225e-07, -9.282364102626755e-06, 2.0618829521310029e-07, 4.0354978388623246e-07],
    ),
    'coif1': (True,
        [0.16112094757661907, 0.10404409041681392, 0.38486485536917125, 0.8525719909490324, 0.16112103954528517, -0.24950936148382774],
        [-0.24950936148382774, -0.16112103954528517, 0.8525719909490324, -0.38486485536917125, 0.10404409041681392, -0.16112094757661907],
        [-0.24950936148382774, 0.16112103954528517, 0.8525719909490324, 0.38486485536917125, 0.10404409041681392, 0.16112094757661907],
        [-0.16112094757661907, 0.10404409041681392, -0.38486485536917125, 0.8525719909490324, -0.16112103954528517, -0.24950936148382774],
    ),
    'coif2': (True,
        [0.016387336463117488, -0.04146493678671736, -0.067372554723476, 0.3861100668221755, 0.8127236354492571, 0.4170051844240432, -0.07648859907844242, -0.05943441864686506, 0.023680171947049758, 0.005611434819405308, -0.0018232088709278695, -0.0007205494455249233],
        [-0.0007205494455249233, 0.0018232088709278695, 0.005611434819405308, -0.023680171947049758, -0.05943441864686506, 0.07648859907844242, 0.4170051844240432, -0.8127236354492571, 0.3861100668221755, 0.067372554723476, -0.04146493678671736, -0.016387336463117488],
        [-0.0007205494455249233, -0.0018232088709278695, 0.005611434819405308, 0.023680171947049758, -0.05943441864686506, -0.07648859907844242, 0.4170051844240432, 0.8127236354492571, 0.3861100668221755, -0.067372554723476, -0.04146493678671736, 0.016387336463117488],
        [-0.016387336463117488, -0.04146493678671736, 0.067372554723476, 0.3861100668221755, -0.8127236354492571, 0.4170051844240432, 0.07648859907844242, -0.05943441864686506, -0.023680171947049758, 0.005611434819405308, 0.0018232088709278695, -0.0007205494455249233],
    ),
    'coif4': (True,
        [0.0008923136809855283, -0.0016294920183990921, -0.007346166372460054, 0.016068944004938853, 0.02668230023714953, -0.08126669979944373, -0.05607731333037822, 0.41530840714545947, 0.7822389307836503, 0.4343860565625117, -0.06662747419373508, -0.09622044218452225, 0.03933442735835455, 0.02508226166841362, -0.015211731813741261, -0.00565828613971829, 0.0037514361468029287, 0.001266561407902337, -0.0005890204763244543, -0.0002599744168747669, 6.233888679272356e-05, 3.122987908398284e-05, -3.259651030536483e-06, -1.7849923224521478e-06],
        [-1.7849923224521478e-06, 3.259651030536483e-06, 3.122987908398284e-05, -6.233888679272356e-05, -0.0002599744168747669, 0.0005890204763244543, 0.001266561407902337, -0.0037514361468029287, -0.00565828613971829, 0.015211731813741261, 0.02508226166841362, -0.03933442735835455, -0.09622044218452225, 0.06662747419373508, 0.4343860565625117, -0.7822389307836503, 0.41530840714545947, 0.05607731333037822, -0.08126669979944373, -0.02668230023714953, 0.016068944004938853, 0.007346166372460054, -0.0016294920183990921, -0.0008923136809855283],
        [-1.7849923224521478e-06, -3.259651030536483e-06, 3.122987908398284e-05, 6.233888679272356e-05, -0.0002599744168747669, -0.0005890204763244543, 0.001266561407902337, 0.0037514361468029287, -0.00565828613971829, -0.015211731813741261, 0.02508226166841362, 0.03933442735835455, -0.09622044218452225, -0.06662747419373508, 0.4343860565625117, 0.7822389307836503, 0.41530840714545947, -0.05607731333037822, -0.08126669979944373, 0.02668230023714953, 0.016068944004938853, -0.007346166372460054, -0.0016294920183990921, 0.0008923136809855283],
        [-0.0008923136809855283, -0.0016294920183990921, 0.007346166372460054, 0.016068944004938853, -0.02668230023714953, -0.08126669979944373, 0.05607731333037822, 0.41530840714545947, -0.7822389307836503, 0.4343860565625117, 0.06662747419373508, -0.09622044218452225, -0.03933442735835455, 0.02508226166841362, 0.015211731813741261, -0.00565828613971829, -0.0037514361468029287, 0.001266561407902337, 0.0005890204763244543, -0.0002599744168747669, -6.233888679272356e-05, 3.122987908398284e-05, 3.259651030536483e-06, -1.7849923224521478e-06],
    ),
    'coif8': (True,
        [5.771968905349618e-07, -3.2590110755694316e-06, -7.150859405423178e-06, 2.8360378667765627e-06, 1.808406240146231e-05, 3.2083466515453763e-06, -0.0002265998391388387, 0.00033865796074682034, 0.0021964943589359394, -0.004184519355421777, -0.0101452072303252, 0.02351375758474084, 0.028137679508814382, -0.0919592382998937, -0.052013935517520864, 0.4214656315183546, 0.7743363579148023, 0.43802271485367844, -0.062054126905164604, -0.10547819888784837, 0.04120781729592627, 0.03268236285409749, -0.019754765969323615, -0.009233386689786478, 0.006856947469757463, 0.0023943956331915, -0.001664638549669498, -0.0005750033467720302, 0.00022807962006193854, 0.00015587508830991958, -3.0150882907298034e-05, -3.197752301406293e-05, 2.443241926321577e-05, -1.7862553426054854e-05, 7.67050793574137e-06, 4.696976857012275e-06, -9.278984448253334e-06, 7.2831948053680634e-06, -2.7897652650479417e-06, -9.998386777009913e-07, 1.3739550292889855e-06, -1.2221920412474248e-07, -6.1803192518967e-08, -1.9759410984208253e-07, 9.735063428255555e-08, 1.597326188340406e-09, 5.43607156741368e-09, -4.744464763152951e-09],
        [-4.744464763152951e-09, -5.43607156741368e-09, 1.597326188340406e-09, -9.735063428255555e-08, -1.9759410984208253e-07, 6.1803192518967e-08, -1.2221920412474248e-07, -1.3739550292889855e-06, -9.998386777009913e-07, 2.7897652650479417e-06, 7.2831948053680634e-06, 9.278984448253334e-06, 4.696976857012275e-06, -7.67050793574137e-06, -1.7862553426054854e-05, -2.443241926321577e-05, -3.197752301406293e-05, 3.0150882907298034e-05, 0.00015587508830991958, -0.00022807962006193854, -0.0005750033467720302, 0.001664638549669498, 0.0023943956331915, -0.006856947469757463, -0.009233386689786478, 0.019754765969323615, 0.03268236285409749, -0.04120781729592627, -0.10547819888784837, 0.062054126905164604, 0.43802271485367844, -0.7743363579148023, 0.4214656315183546, 0.052013935517520864, -0.0919592382998937, -0.028137679508814382, 0.02351375758474084, 0.0101452072303252, -0.004184519355421777, -0.0021964943589359394, 0.00033865796074682034, 0.0002265998391388387, 3.2083466515453763e-06, -1.808406240146231e-05, 2.8360378667765627e-06, 7.150859405423178e-06, -3.2590110755694316e-06, -5.771968905349618e-07],
        [-4.744464763152951e-09, 5.43607156741368e-09, 1.597326188340406e-09, 9.735063428255555e-08, -1.9759410984208253e-07, -6.1803192518967e-08, -1.2221920412474248e-07, 1.3739550292889855e-06, -9.998386777009913e-07, -2.7897652650479417e-06, 7.2831948053680634e-06, -9.278984448253334e-06, 4.696976857012275e-06, 7.67050793574137e-06, -1.7862553426054854e-05, 2.443241926321577e-05, -3.197752301406293e-05, -3.0150882907298034e-05, 0.00015587508830991958, 0.00022807962006193854, -0.0005750033467720302, -0.001664638549669498, 0.0023943956331915, 0.006856947469757463, -0.009233386689786478, -0.019754765969323615, 0.03268236285409749, 0.04120781729592627, -0.10547819888784837, -0.062054126905164604, 0.43802271485367844, 0.7743363579148023, 0.4214656315183546, -0.052013935517520864, -0.0919592382998937, 0.028137679508814382, 0.02351375758474084, -0.0101452072303252, -0.004184519355421777, 0.0021964943589359394, 0.00033865796074682034, -0.0002265998391388387, 3.2083466515453763e-06, 1.808406240146231e-05, 2.8360378667765627e-06, -7.150859405423178e-06, -3.2590110755694316e-06, 5.771968905349618e-07],
        [-5.771968905349618e-07, -3.2590110755694316e-06, 7.150859405423178e-06, 2.8360378667765627e-06, -1.808406240146231e-05, 3.2083466515453763e-06, 0.0002265998391388387, 0.00033865796074682034, -0.0021964943589359394, -0.004184519355421777, 0.0101452072303252, 0.02351375758474084, -0.028137679508814382, -0.0919592382998937, 0.052013935517520864, 0.4214656315183546, -0.7743363579148023, 0.43802271485367844, 0.062054126905164604, -0.10547819888784837, -0.04120781729592627, 0.03268236285409749, 0.019754765969323615, -0.009233386689786478, -0.006856947469757463, 0.0023943956331915, 0.001664638549669498, -0.0005750033467720302, -0.00022807962006193854, 0.00015587508830991958, 3.0150882907298034e-05, -3.197752301406293e-05, -2.443241926321577e-05, -1.7862553426054854e-05, -7.67050793574137e-06, 4.696976857012275e-06, 9.278984448253334e-06, 7.2831948053680634e-06, 2.7897652650479417e-06, -9.998386777009913e-07, -1.3739550292889855e-06, -1.2221920412474248e-07, 6.1803192518967e-08, -1.9759410984208253e-07, -9.735063428255555e-08, 1.597326188340406e-09, -5.43607156741368e-09, -4.744464763152951e-09],
    ),
    'dmey': (True,
        [2.1673330611567277e-06, -3.7221627834721987e-06, 7.30082246993132e-06, -1.9185057563224735e-05, 2.1464145969990926e-06, -4.484428014335034e-06, 3.2834632697389774e-06, 5.646451425768467e-05, -5.626110692751245e-05, 7.869927865733298e-06, 0.00012619426427628197, -0.00014339624236888492, -0.0003869182132800358, 9.214424596288036e-05, 0.0009771442662387174, 0.0002224798786570488, -0.0024589481029220206, -0.0007191058057466657, 0.0056606056520205105, 0.0010881277565200256, -0.012258846441591238, 1.3283858594306956e-05, 0.02398806310343292, -0.005261546253400984, -0.04311881047742265, 0.019610738527703748, 0.07415883983259663, -0.05434371799838979, -0.14108769116782985, 0.18054792657698224, 0.6603073882325499, 0.6603066351533206, 0.180550241786961, -0.14108799882469758, -0.054336384078551965, 0.0741608708542447, 0.01961972768244665, -0.0431160660624755, -0.005256377809210203, 0.02398737612766915, 3.75983946822139e-05, -0.012249350509179266, 0.0010869804794947958, 0.005670328913926327, -0.0007429566388673721, -0.0024657149503551734, 0.0003839961703501363, 0.0010549277285277778, -0.0002146790495623125, -0.00044748127379983025, 0.00011979904150904164, 0.00021464206858765533, 2.9086396076644785e-05, -9.071211567595495e-05, -5.4549486803658435e-05, 3.22000280019025e-05, 1.2680344500940699e-05, -1.2407794008522929e-05, 8.086035519386669e-06, 6.969581782644637e-06, -2.1747296971573166e-06, -1.2663044373589903e-06],
        [-1.2663044373589903e-06, 2.1747296971573166e-06, 6.969581782644637e-06, -8.086035519386669e-06, -1.2407794008522929e-05, -1.2680344500940699e-05, 3.22000280019025e-05, 5.4549486803658435e-05, -9.071211567595495e-05, -2.9086396076644785e-05, 0.00021464206858765533, -0.00011979904150904164, -0.00044748127379983025, 0.0002146790495623125, 0.0010549277285277778, -0.0003839961703501363, -0.0024657149503551734, 0.0007429566388673721, 0.005670328913926327, -0.0010869804794947958, -0.012249350509179266, -3.75983946822139e-05, 0.02398737612766915, 0.005256377809210203, -0.0431160660624755, -0.01961972768244665, 0.0741608708542447, 0.054336384078551965, -0.14108799882469758, -0.180550241786961, 0.6603066351533206, -0.6603073882325499, 0.18054792657698224, 0.14108769116782985, -0.05434371799838979, -0.07415883983259663, 0.019610738527703748, 0.04311881047742265, -0.005261546253400984, -0.02398806310343292, 1.3283858594306956e-05, 0.012258846441591238, 0.0010881277565200256, -0.0056606056520205105, -0.0007191058057466657, 0.0024589481029220206, 0.0002224798786570488, -0.0009771442662387174, 9.214424596288036e-05, 0.0003869182132800358, -0.00014339624236888492, -0.00012619426427628197, 7.869927865733298e-06, 5.626110692751245e-05, 5.646451425768467e-05, -3.2834632697389774e-06, -4.484428014335034e-06, -2.1464145969990926e-06, -1.9185057563224735e-05, -7.30082246993132e-06, -3.7221627834721987e-06, -2.1673330611567277e-06],
        [-1.2663044373589903e-06, -2.1747296971573166e-06, 6.969581782644637e-06, 8.086035519386669e-06, -1.2407794008522929e-05, 1.2680344500940699e-05, 3.22000280019025e-05, -5.4549486803658435e-05, -9.071211567595495e-05, 2.9086396076644785e-05, 0.00021464206858765533, 0.00011979904150904164, -0.00044748127379983025, -0.0002146790495623125, 0.0010549277285277778, 0.0003839961703501363, -0.0024657149503551734, -0.0007429566388673721, 0.005670328913926327, 0.0010869804794947958, -0.012249350509179266, 3.75983946822139e-05, 0.02398737612766915, -0.005256377809210203, -0.0431160660624755, 0.01961972768244665, 0.0741608708542447, -0.054336384078551965, -0.14108799882469758, 0.180550241786961, 0.6603066351533206, 0.6603073882325499, 0.18054792657698224, -0.14108769116782985, -0.05434371799838979, 0.07415883983259663, 0.019610738527703748, -0.04311881047742265, -0.005261546253400984, 0.02398806310343292, 1.3283858594306956e-05, -0.012258846441591238, 0.0010881277565200256, 0.0056606056520205105, -0.0007191058057466657, -0.0024589481029220206, 0.0002224798786570488, 0.0009771442662387174, 9.214424596288036e-05, -0.0003869182132800358, -0.00014339624236888492, 0.00012619426427628197, 7.869927865733298e-06, -5.626110692751245e-05, 5.646451425768467e-05, 3.2834632697389774e-06, -4.484428014335034e-06, 2.1464145969990926e-06, -1.9185057563224735e-05, 7.30082246993132e-06, -3.7221627834721987e-06, 2.1673330611567277e-06],
        [-2.1673330611567277e-06, -3.7221627834721987e-06, -7.30082246993132e-06, -1.9185057563224735e-05, -2.1464145969990926e-06, -4.484428014335034e-06, -3.2834632697389774e-06, 5.646451425768467e-05, 5.626110692751245e-05, 7.869927865733298e-06, -0.00012619426427628197, -0.00014339624236888492, 0.0003869182132800358, 9.214424596288036e-05, -0.0009771442662387174, 0.0002224798786570488, 0.0024589481029220206, -0.0007191058057466657, -0.0056606056520205105, 0.0010881277565200256, 0.012258846441591238, 1.3283858594306956e-05, -0.02398806310343292, -0.005261546253400984, 0.04311881047742265, 0.019610738527703748, -0.07415883983259663, -0.05434371799838979, 0.14108769116782985, 0.18054792657698224, -0.6603073882325499, 0.6603066351533206, -0.180550241786961, -0.14108799882469758, 0.054336384078551965, 0.0741608708542447, -0.01961972768244665, -0.0431160660624755, 0.005256377809210203, 0.02398737612766915, -3.75983946822139e-05, -0.012249350509179266, -0.0010869804794947958, 0.005670328913926327, 0.0007429566388673721, -0.0024657149503551734, -0.0003839961703501363, 0.0010549277285277778, 0.0002146790495623125, -0.00044748127379983025, -0.00011979904150904164, 0.00021464206858765533, -2.9086396076644785e-05, -9.071211567595495e-05, 5.4549486803658435e-05, 3.22000280019025e-05, -1.2680344500940699e-05, -1.2407794008522929e-05, -8.086035519386669e-06, 6.969581782644637e-06, 2.1747296971573166e-06, -1.2663044373589903e-06],
    ),
    'bior1.1': (False,
        [0.7071067811865475, 0.7071067811865475],
        [-0.7071067811865475, 0.7071067811865475],
        [0.7071067811865475, 0.7071067811865475],
        [0.7071067811865475, -0.7071067811865475],
    ),
    'bior1.3': (False,
        [-0.08838834764831845, 0.08838834764831845, 0.7071067811865476, 0.7071067811865476, 0.08838834764831845, -0.08838834764831845],
        [-0.0, 0.0, -0.7071067811865475, 0.7071067811865475, -0.0, 0.0],
        [0.0, 0.0, 0.7071067811865475, 0.7071067811865475, 0.0, 0.0],
        [-0.08838834764831845, -0.08838834764831845, 0.7071067811865476, -0.7071067811865476, 0.08838834764831845, 0.08838834764831845],
    ),
    'bior2.2': (False,
        [0.0, -0.1767766952966369, 0.3535533905932738, 1.0606601717798214, 0.3535533905932738, -0.1767766952966369],
        [0.0, -0.3535533905932738, 0.7071067811865476, -0.3535533905932738, 0.0, -0.0],
        [0.0, 0.3535533905932738, 0.7071067811865476, 0.3535533905932738, 0.0, 0.0],
        [-0.0, -0.1767766952966369, -0.3535533905932738, 1.0606601717798214, -0.3535533905932738, -0.1767766952966369],
    ),
    'bior3.3': (False,
        [0.06629126073623884, -0.19887378220871652, -0.15467960838455727, 0.9943689110435825, 0.9943689110435825, -0.15467960838455727, -0.19887378220871652, 0.06629126073623884],
        [-0.0, 0.0, -0.1767766952966369, 0.5303300858899107, -0.5303300858899107, 0.1767766952966369, -0.0, 0.0],
        [0.0, 0.0, 0.1767766952966369, 0.5303300858899107, 0.5303300858899107, 0.1767766952966369, 0.0, 0.0],
        [0.06629126073623884, 0.19887378220871652, -0.15467960838455727, -0.9943689110435825, 0.9943689110435825, 0.15467960838455727, -0.19887378220871652, -0.06629126073623884],
    ),
}
