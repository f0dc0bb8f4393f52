"""Conway polynomials (coefficients low-degree-first), generated by tools/gen_conway.py."""

CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (11, 3): (9, 2, 0, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (13, 3): (11, 2, 0, 1),
    (17, 1): (14, 1),
    (17, 2): (3, 16, 1),
    (17, 3): (14, 1, 0, 1),
    (19, 1): (17, 1),
    (19, 2): (2, 18, 1),
    (19, 3): (17, 4, 0, 1),
    (23, 1): (18, 1),
    (23, 2): (5, 21, 1),
    (29, 1): (27, 1),
    (29, 2): (2, 24, 1),
    (31, 1): (28, 1),
    (31, 2): (3, 29, 1),
    (37, 1): (35, 1),
    (37, 2): (2, 33, 1),
    (41, 1): (35, 1),
    (41, 2): (6, 38, 1),
    (43, 1): (40, 1),
    (43, 2): (3, 42, 1),
    (47, 1): (42, 1),
    (47, 2): (5, 45, 1),
    (53, 1): (51, 1),
    (53, 2): (2, 49, 1),
    (59, 1): (57, 1),
    (59, 2): (2, 58, 1),
    (61, 1): (59, 1),
    (61, 2): (2, 60, 1),
    (67, 1): (65, 1),
    (67, 2): (2, 63, 1),
    (71, 1): (64, 1),
    (71, 2): (7, 69, 1),
    (73, 1): (68, 1),
    (73, 2): (5, 70, 1),
    (79, 1): (76, 1),
    (79, 2): (3, 78, 1),
    (83, 1): (81, 1),
    (83, 2): (2, 82, 1),
    (89, 1): (86, 1),
    (89, 2): (3, 82, 1),
    (97, 1): (92, 1),
    (101, 1): (99, 1),
    (103, 1): (98, 1),
    (107, 1): (105, 1),
    (109, 1): (103, 1),
    (113, 1): (110, 1),
    (127, 1): (124, 1),
    (131, 1): (129, 1),
    (137, 1): (134, 1),
    (139, 1): (137, 1),
    (149, 1): (147, 1),
    (151, 1): (145, 1),
    (157, 1): (152, 1),
    (163, 1): (161, 1),
    (167, 1): (162, 1),
    (173, 1): (171, 1),
    (179, 1): (177, 1),
    (181, 1): (179, 1),
    (191, 1): (172, 1),
    (193, 1): (188, 1),
    (197, 1): (195, 1),
    (199, 1): (196, 1),
    (211, 1): (209, 1),
    (223, 1): (220, 1),
    (227, 1): (225, 1),
    (229, 1): (223, 1),
    (233, 1): (230, 1),
    (239, 1): (232, 1),
    (241, 1): (234, 1),
    (251, 1): (245, 1),
    (257, 1): (254, 1),
    (263, 1): (258, 1),
    (269, 1): (267, 1),
    (271, 1): (265, 1),
    (277, 1): (272, 1),
    (281, 1): (278, 1),
    (283, 1): (280, 1),
    (293, 1): (291, 1),
    (307, 1): (302, 1),
    (311, 1): (294, 1),
    (313, 1): (303, 1),
    (317, 1): (315, 1),
    (331, 1): (328, 1),
    (337, 1): (327, 1),
    (347, 1): (345, 1),
    (349, 1): (347, 1),
    (353, 1): (350, 1),
    (359, 1): (352, 1),
    (367, 1): (361, 1),
    (373, 1): (371, 1),
    (379, 1): (377, 1),
    (383, 1): (378, 1),
    (389, 1): (387, 1),
    (397, 1): (392, 1),
    (401, 1): (398, 1),
    (409, 1): (388, 1),
    (419, 1): (417, 1),
    (421, 1): (419, 1),
    (431, 1): (424, 1),
    (433, 1): (428, 1),
    (439, 1): (424, 1),
    (443, 1): (441, 1),
    (449, 1): (446, 1),
    (457, 1): (444, 1),
    (461, 1): (459, 1),
    (463, 1): (460, 1),
    (467, 1): (465, 1),
    (479, 1): (466, 1),
    (487, 1): (484, 1),
    (491, 1): (489, 1),
    (499, 1): (492, 1),
    (503, 1): (498, 1),
    (509, 1): (507, 1),
    (521, 1): (518, 1),
    (523, 1): (521, 1),
    (541, 1): (539, 1),
    (547, 1): (545, 1),
    (557, 1): (555, 1),
    (563, 1): (561, 1),
    (569, 1): (566, 1),
    (571, 1): (568, 1),
    (577, 1): (572, 1),
    (587, 1): (585, 1),
    (593, 1): (590, 1),
    (599, 1): (592, 1),
    (601, 1): (594, 1),
    (607, 1): (604, 1),
    (613, 1): (611, 1),
    (617, 1): (614, 1),
    (619, 1): (617, 1),
    (631, 1): (628, 1),
    (641, 1): (638, 1),
    (643, 1): (632, 1),
    (647, 1): (642, 1),
    (653, 1): (651, 1),
    (659, 1): (657, 1),
    (661, 1): (659, 1),
    (673, 1): (668, 1),
    (677, 1): (675, 1),
    (683, 1): (678, 1),
    (691, 1): (688, 1),
    (701, 1): (699, 1),
    (709, 1): (707, 1),
    (719, 1): (708, 1),
    (727, 1): (722, 1),
    (733, 1): (727, 1),
    (739, 1): (736, 1),
    (743, 1): (738, 1),
    (751, 1): (748, 1),
    (757, 1): (755, 1),
    (761, 1): (755, 1),
    (769, 1): (758, 1),
    (773, 1): (771, 1),
    (787, 1): (785, 1),
    (797, 1): (795, 1),
    (809, 1): (806, 1),
    (811, 1): (808, 1),
    (821, 1): (819, 1),
    (823, 1): (820, 1),
    (827, 1): (825, 1),
    (829, 1): (827, 1),
    (839, 1): (828, 1),
    (853, 1): (851, 1),
    (857, 1): (854, 1),
    (859, 1): (857, 1),
    (863, 1): (858, 1),
    (877, 1): (875, 1),
    (881, 1): (878, 1),
    (883, 1): (881, 1),
    (887, 1): (882, 1),
    (907, 1): (905, 1),
    (911, 1): (894, 1),
    (919, 1): (912, 1),
    (929, 1): (926, 1),
    (937, 1): (932, 1),
    (941, 1): (939, 1),
    (947, 1): (945, 1),
    (953, 1): (950, 1),
    (967, 1): (962, 1),
    (971, 1): (965, 1),
    (977, 1): (974, 1),
    (983, 1): (978, 1),
    (991, 1): (985, 1),
    (997, 1): (990, 1),
    (1009, 1): (998, 1),
    (1013, 1): (1010, 1),
    (1019, 1): (1017, 1),
    (1021, 1): (1011, 1),
    (1031, 1): (1017, 1),
    (1033, 1): (1028, 1),
    (1039, 1): (1036, 1),
    (1049, 1): (1046, 1),
    (1051, 1): (1044, 1),
    (1061, 1): (1059, 1),
    (1063, 1): (1060, 1),
    (1069, 1): (1063, 1),
    (1087, 1): (1084, 1),
    (1091, 1): (1089, 1),
    (1093, 1): (1088, 1),
    (1097, 1): (1094, 1),
    (1103, 1): (1098, 1),
    (1109, 1): (1107, 1),
    (1117, 1): (1115, 1),
    (1123, 1): (1121, 1),
    (1129, 1): (1118, 1),
    (1151, 1): (1134, 1),
    (1153, 1): (1148, 1),
    (1163, 1): (1158, 1),
    (1171, 1): (1169, 1),
    (1181, 1): (1174, 1),
    (1187, 1): (1185, 1),
    (1193, 1): (1190, 1),
    (1201, 1): (1190, 1),
    (1213, 1): (1211, 1),
    (1217, 1): (1214, 1),
    (1223, 1): (1218, 1),
    (1229, 1): (1227, 1),
    (1231, 1): (1228, 1),
    (1237, 1): (1235, 1),
    (1249, 1): (1242, 1),
    (1259, 1): (1257, 1),
    (1277, 1): (1275, 1),
    (1279, 1): (1276, 1),
    (1283, 1): (1281, 1),
    (1289, 1): (1283, 1),
    (1291, 1): (1289, 1),
    (1297, 1): (1287, 1),
    (1301, 1): (1299, 1),
    (1303, 1): (1297, 1),
    (1307, 1): (1305, 1),
    (1319, 1): (1306, 1),
    (1321, 1): (1308, 1),
    (1327, 1): (1324, 1),
    (1361, 1): (1358, 1),
    (1367, 1): (1362, 1),
    (1373, 1): (1371, 1),
    (1381, 1): (1379, 1),
    (1399, 1): (1386, 1),
    (1409, 1): (1406, 1),
    (1423, 1): (1420, 1),
    (1427, 1): (1425, 1),
    (1429, 1): (1423, 1),
    (1433, 1): (1430, 1),
    (1439, 1): (1432, 1),
    (1447, 1): (1444, 1),
    (1451, 1): (1449, 1),
    (1453, 1): (1451, 1),
    (1459, 1): (1456, 1),
    (1471, 1): (1465, 1),
    (1481, 1): (1478, 1),
    (1483, 1): (1481, 1),
    (1487, 1): (1482, 1),
    (1489, 1): (1475, 1),
    (1493, 1): (1491, 1),
    (1499, 1): (1497, 1),
    (1511, 1): (1500, 1),
    (1523, 1): (1521, 1),
    (1531, 1): (1529, 1),
    (1543, 1): (1538, 1),
    (1549, 1): (1547, 1),
    (1553, 1): (1550, 1),
    (1559, 1): (1540, 1),
    (1567, 1): (1564, 1),
    (1571, 1): (1569, 1),
    (1579, 1): (1576, 1),
    (1583, 1): (1578, 1),
    (1597, 1): (1586, 1),
    (1601, 1): (1598, 1),
    (1607, 1): (1602, 1),
    (1609, 1): (1602, 1),
    (1613, 1): (1610, 1),
    (1619, 1): (1617, 1),
    (1621, 1): (1619, 1),
    (1627, 1): (1624, 1),
    (1637, 1): (1635, 1),
    (1657, 1): (1646, 1),
    (1663, 1): (1660, 1),
    (1667, 1): (1665, 1),
    (1669, 1): (1667, 1),
    (1693, 1): (1691, 1),
    (1697, 1): (1694, 1),
    (1699, 1): (1696, 1),
    (1709, 1): (1706, 1),
    (1721, 1): (1718, 1),
    (1723, 1): (1720, 1),
    (1733, 1): (1731, 1),
    (1741, 1): (1739, 1),
    (1747, 1): (1745, 1),
    (1753, 1): (1746, 1),
    (1759, 1): (1753, 1),
    (1777, 1): (1772, 1),
    (1783, 1): (1773, 1),
    (1787, 1): (1785, 1),
    (1789, 1): (1783, 1),
    (1801, 1): (1790, 1),
    (1811, 1): (1805, 1),
    (1823, 1): (1818, 1),
    (1831, 1): (1828, 1),
    (1847, 1): (1842, 1),
    (1861, 1): (1859, 1),
    (1867, 1): (1865, 1),
    (1871, 1): (1857, 1),
    (1873, 1): (1863, 1),
    (1877, 1): (1875, 1),
    (1879, 1): (1873, 1),
    (1889, 1): (1886, 1),
    (1901, 1): (1899, 1),
    (1907, 1): (1905, 1),
    (1913, 1): (1910, 1),
    (1931, 1): (1929, 1),
    (1933, 1): (1928, 1),
    (1949, 1): (1947, 1),
    (1951, 1): (1948, 1),
    (1973, 1): (1971, 1),
    (1979, 1): (1977, 1),
    (1987, 1): (1985, 1),
    (1993, 1): (1988, 1),
    (1997, 1): (1995, 1),
    (1999, 1): (1996, 1),
    (2003, 1): (1998, 1),
    (2011, 1): (2008, 1),
    (2017, 1): (2012, 1),
    (2027, 1): (2025, 1),
    (2029, 1): (2027, 1),
    (2039, 1): (2032, 1),
    (2053, 1): (2051, 1),
    (2063, 1): (2058, 1),
    (2069, 1): (2067, 1),
    (2081, 1): (2078, 1),
    (2083, 1): (2081, 1),
    (2087, 1): (2082, 1),
    (2089, 1): (2082, 1),
    (2099, 1): (2097, 1),
    (2111, 1): (2104, 1),
    (2113, 1): (2108, 1),
    (2129, 1): (2126, 1),
    (2131, 1): (2129, 1),
    (2137, 1): (2127, 1),
    (2141, 1): (2139, 1),
    (2143, 1): (2140, 1),
    (2153, 1): (2150, 1),
    (2161, 1): (2138, 1),
    (2179, 1): (2172, 1),
    (2203, 1): (2198, 1),
    (2207, 1): (2202, 1),
    (2213, 1): (2211, 1),
    (2221, 1): (2219, 1),
    (2237, 1): (2235, 1),
    (2239, 1): (2236, 1),
    (2243, 1): (2241, 1),
    (2251, 1): (2244, 1),
    (2267, 1): (2265, 1),
    (2269, 1): (2267, 1),
    (2273, 1): (2270, 1),
    (2281, 1): (2274, 1),
    (2287, 1): (2268, 1),
    (2293, 1): (2291, 1),
    (2297, 1): (2292, 1),
    (2309, 1): (2307, 1),
    (2311, 1): (2308, 1),
    (2333, 1): (2331, 1),
    (2339, 1): (2337, 1),
    (2341, 1): (2334, 1),
    (2347, 1): (2344, 1),
    (2351, 1): (2338, 1),
    (2357, 1): (2355, 1),
    (2371, 1): (2369, 1),
    (2377, 1): (2372, 1),
    (2381, 1): (2378, 1),
    (2383, 1): (2378, 1),
    (2389, 1): (2387, 1),
    (2393, 1): (2390, 1),
    (2399, 1): (2388, 1),
    (2411, 1): (2405, 1),
    (2417, 1): (2414, 1),
    (2423, 1): (2418, 1),
    (2437, 1): (2435, 1),
    (2441, 1): (2435, 1),
    (2447, 1): (2442, 1),
    (2459, 1): (2457, 1),
    (2467, 1): (2465, 1),
    (2473, 1): (2468, 1),
    (2477, 1): (2475, 1),
    (2503, 1): (2500, 1),
    (2521, 1): (2504, 1),
    (2531, 1): (2529, 1),
    (2539, 1): (2537, 1),
    (2543, 1): (2538, 1),
    (2549, 1): (2547, 1),
    (2551, 1): (2545, 1),
    (2557, 1): (2555, 1),
    (2579, 1): (2577, 1),
    (2591, 1): (2584, 1),
    (2593, 1): (2586, 1),
    (2609, 1): (2606, 1),
    (2617, 1): (2612, 1),
    (2621, 1): (2619, 1),
    (2633, 1): (2630, 1),
    (2647, 1): (2644, 1),
    (2657, 1): (2654, 1),
    (2659, 1): (2657, 1),
    (2663, 1): (2658, 1),
    (2671, 1): (2664, 1),
    (2677, 1): (2675, 1),
    (2683, 1): (2681, 1),
    (2687, 1): (2682, 1),
    (2689, 1): (2670, 1),
    (2693, 1): (2691, 1),
    (2699, 1): (2697, 1),
    (2707, 1): (2705, 1),
    (2711, 1): (2704, 1),
    (2713, 1): (2708, 1),
    (2719, 1): (2716, 1),
    (2729, 1): (2726, 1),
    (2731, 1): (2728, 1),
    (2741, 1): (2739, 1),
    (2749, 1): (2743, 1),
    (2753, 1): (2750, 1),
    (2767, 1): (2764, 1),
    (2777, 1): (2774, 1),
    (2789, 1): (2787, 1),
    (2791, 1): (2785, 1),
    (2797, 1): (2795, 1),
    (2801, 1): (2798, 1),
    (2803, 1): (2801, 1),
    (2819, 1): (2817, 1),
    (2833, 1): (2828, 1),
    (2837, 1): (2835, 1),
    (2843, 1): (2841, 1),
    (2851, 1): (2849, 1),
    (2857, 1): (2846, 1),
    (2861, 1): (2859, 1),
    (2879, 1): (2872, 1),
    (2887, 1): (2882, 1),
    (2897, 1): (2894, 1),
    (2903, 1): (2898, 1),
    (2909, 1): (2907, 1),
    (2917, 1): (2912, 1),
    (2927, 1): (2922, 1),
    (2939, 1): (2937, 1),
    (2953, 1): (2940, 1),
    (2957, 1): (2955, 1),
    (2963, 1): (2961, 1),
    (2969, 1): (2966, 1),
    (2971, 1): (2961, 1),
    (2999, 1): (2982, 1),
    (3001, 1): (2987, 1),
    (3011, 1): (3009, 1),
    (3019, 1): (3017, 1),
    (3023, 1): (3018, 1),
    (3037, 1): (3035, 1),
    (3041, 1): (3038, 1),
    (3049, 1): (3038, 1),
    (3061, 1): (3055, 1),
    (3067, 1): (3065, 1),
    (3079, 1): (3073, 1),
    (3083, 1): (3081, 1),
    (3089, 1): (3086, 1),
    (3109, 1): (3103, 1),
    (3119, 1): (3112, 1),
    (3121, 1): (3114, 1),
    (3137, 1): (3134, 1),
    (3163, 1): (3160, 1),
    (3167, 1): (3162, 1),
    (3169, 1): (3162, 1),
    (3181, 1): (3174, 1),
    (3187, 1): (3185, 1),
    (3191, 1): (3180, 1),
    (3203, 1): (3201, 1),
    (3209, 1): (3206, 1),
    (3217, 1): (3212, 1),
    (3221, 1): (3211, 1),
    (3229, 1): (3223, 1),
    (3251, 1): (3245, 1),
    (3253, 1): (3251, 1),
    (3257, 1): (3254, 1),
    (3259, 1): (3256, 1),
    (3271, 1): (3268, 1),
    (3299, 1): (3297, 1),
    (3301, 1): (3295, 1),
    (3307, 1): (3305, 1),
    (3313, 1): (3303, 1),
    (3319, 1): (3313, 1),
    (3323, 1): (3321, 1),
    (3329, 1): (3326, 1),
    (3331, 1): (3328, 1),
    (3343, 1): (3338, 1),
    (3347, 1): (3345, 1),
    (3359, 1): (3348, 1),
    (3361, 1): (3339, 1),
    (3371, 1): (3369, 1),
    (3373, 1): (3368, 1),
    (3389, 1): (3386, 1),
    (3391, 1): (3388, 1),
    (3407, 1): (3402, 1),
    (3413, 1): (3411, 1),
    (3433, 1): (3428, 1),
    (3449, 1): (3446, 1),
    (3457, 1): (3450, 1),
    (3461, 1): (3459, 1),
    (3463, 1): (3460, 1),
    (3467, 1): (3465, 1),
    (3469, 1): (3467, 1),
    (3491, 1): (3489, 1),
    (3499, 1): (3497, 1),
    (3511, 1): (3504, 1),
    (3517, 1): (3515, 1),
    (3527, 1): (3522, 1),
    (3529, 1): (3512, 1),
    (3533, 1): (3531, 1),
    (3539, 1): (3537, 1),
    (3541, 1): (3534, 1),
    (3547, 1): (3545, 1),
    (3557, 1): (3555, 1),
    (3559, 1): (3556, 1),
    (3571, 1): (3569, 1),
    (3581, 1): (3579, 1),
    (3583, 1): (3580, 1),
    (3593, 1): (3590, 1),
    (3607, 1): (3602, 1),
    (3613, 1): (3611, 1),
    (3617, 1): (3614, 1),
    (3623, 1): (3618, 1),
    (3631, 1): (3616, 1),
    (3637, 1): (3635, 1),
    (3643, 1): (3641, 1),
    (3659, 1): (3657, 1),
    (3671, 1): (3658, 1),
    (3673, 1): (3668, 1),
    (3677, 1): (3675, 1),
    (3691, 1): (3689, 1),
    (3697, 1): (3692, 1),
    (3701, 1): (3699, 1),
    (3709, 1): (3707, 1),
    (3719, 1): (3712, 1),
    (3727, 1): (3724, 1),
    (3733, 1): (3731, 1),
    (3739, 1): (3732, 1),
    (3761, 1): (3758, 1),
    (3767, 1): (3762, 1),
    (3769, 1): (3762, 1),
    (3779, 1): (3777, 1),
    (3793, 1): (3788, 1),
    (3797, 1): (3795, 1),
    (3803, 1): (3801, 1),
    (3821, 1): (3818, 1),
    (3823, 1): (3820, 1),
    (3833, 1): (3830, 1),
    (3847, 1): (3842, 1),
    (3851, 1): (3849, 1),
    (3853, 1): (3851, 1),
    (3863, 1): (3858, 1),
    (3877, 1): (3875, 1),
    (3881, 1): (3868, 1),
    (3889, 1): (3878, 1),
    (3907, 1): (3905, 1),
    (3911, 1): (3898, 1),
    (3917, 1): (3915, 1),
    (3919, 1): (3916, 1),
    (3923, 1): (3921, 1),
    (3929, 1): (3926, 1),
    (3931, 1): (3929, 1),
    (3943, 1): (3940, 1),
    (3947, 1): (3945, 1),
    (3967, 1): (3961, 1),
    (3989, 1): (3987, 1),
    (4001, 1): (3998, 1),
    (4003, 1): (4001, 1),
    (4007, 1): (4002, 1),
    (4013, 1): (4011, 1),
    (4019, 1): (4017, 1),
    (4021, 1): (4019, 1),
    (4027, 1): (4024, 1),
    (4049, 1): (4046, 1),
    (4051, 1): (4041, 1),
    (4057, 1): (4052, 1),
    (4073, 1): (4070, 1),
    (4079, 1): (4068, 1),
    (4091, 1): (4089, 1),
    (4093, 1): (4091, 1),
    (4099, 1): (4097, 1),
    (4111, 1): (4099, 1),
    (4127, 1): (4122, 1),
    (4129, 1): (4116, 1),
    (4133, 1): (4131, 1),
    (4139, 1): (4137, 1),
    (4153, 1): (4148, 1),
    (4157, 1): (4155, 1),
    (4159, 1): (4156, 1),
    (4177, 1): (4172, 1),
    (4201, 1): (4190, 1),
    (4211, 1): (4205, 1),
    (4217, 1): (4214, 1),
    (4219, 1): (4217, 1),
    (4229, 1): (4227, 1),
    (4231, 1): (4228, 1),
    (4241, 1): (4238, 1),
    (4243, 1): (4241, 1),
    (4253, 1): (4251, 1),
    (4259, 1): (4257, 1),
    (4261, 1): (4259, 1),
    (4271, 1): (4264, 1),
    (4273, 1): (4268, 1),
    (4283, 1): (4281, 1),
    (4289, 1): (4286, 1),
    (4297, 1): (4292, 1),
    (4327, 1): (4324, 1),
    (4337, 1): (4334, 1),
    (4339, 1): (4329, 1),
    (4349, 1): (4347, 1),
    (4357, 1): (4355, 1),
    (4363, 1): (4361, 1),
    (4373, 1): (4371, 1),
    (4391, 1): (4377, 1),
    (4397, 1): (4395, 1),
    (4409, 1): (4406, 1),
    (4421, 1): (4418, 1),
    (4423, 1): (4420, 1),
    (4441, 1): (4420, 1),
    (4447, 1): (4444, 1),
    (4451, 1): (4449, 1),
    (4457, 1): (4454, 1),
    (4463, 1): (4458, 1),
    (4481, 1): (4478, 1),
    (4483, 1): (4481, 1),
    (4493, 1): (4491, 1),
    (4507, 1): (4505, 1),
    (4513, 1): (4506, 1),
    (4517, 1): (4515, 1),
    (4519, 1): (4516, 1),
    (4523, 1): (4518, 1),
    (4547, 1): (4545, 1),
    (4549, 1): (4543, 1),
    (4561, 1): (4550, 1),
    (4567, 1): (4564, 1),
    (4583, 1): (4578, 1),
    (4591, 1): (4580, 1),
    (4597, 1): (4592, 1),
    (4603, 1): (4601, 1),
    (4621, 1): (4619, 1),
    (4637, 1): (4635, 1),
    (4639, 1): (4636, 1),
    (4643, 1): (4638, 1),
    (4649, 1): (4646, 1),
    (4651, 1): (4648, 1),
    (4657, 1): (4642, 1),
    (4663, 1): (4660, 1),
    (4673, 1): (4670, 1),
    (4679, 1): (4668, 1),
    (4691, 1): (4689, 1),
    (4703, 1): (4698, 1),
    (4721, 1): (4715, 1),
    (4723, 1): (4721, 1),
    (4729, 1): (4712, 1),
    (4733, 1): (4728, 1),
    (4751, 1): (4732, 1),
    (4759, 1): (4756, 1),
    (4783, 1): (4777, 1),
    (4787, 1): (4785, 1),
    (4789, 1): (4787, 1),
    (4793, 1): (4790, 1),
    (4799, 1): (4792, 1),
    (4801, 1): (4794, 1),
    (4813, 1): (4811, 1),
    (4817, 1): (4814, 1),
    (4831, 1): (4828, 1),
    (4861, 1): (4850, 1),
    (4871, 1): (4860, 1),
    (4877, 1): (4875, 1),
    (4889, 1): (4886, 1),
    (4903, 1): (4900, 1),
    (4909, 1): (4903, 1),
    (4919, 1): (4906, 1),
    (4931, 1): (4925, 1),
    (4933, 1): (4931, 1),
    (4937, 1): (4934, 1),
    (4943, 1): (4936, 1),
    (4951, 1): (4945, 1),
    (4957, 1): (4955, 1),
    (4967, 1): (4962, 1),
    (4969, 1): (4958, 1),
    (4973, 1): (4971, 1),
    (4987, 1): (4985, 1),
    (4993, 1): (4988, 1),
    (4999, 1): (4996, 1),
    (5003, 1): (5001, 1),
    (5009, 1): (5006, 1),
    (5011, 1): (5009, 1),
    (5021, 1): (5018, 1),
    (5023, 1): (5020, 1),
    (5039, 1): (5028, 1),
    (5051, 1): (5049, 1),
    (5059, 1): (5057, 1),
    (5077, 1): (5075, 1),
    (5081, 1): (5078, 1),
    (5087, 1): (5082, 1),
    (5099, 1): (5097, 1),
    (5101, 1): (5095, 1),
    (5107, 1): (5105, 1),
    (5113, 1): (5094, 1),
    (5119, 1): (5116, 1),
    (5147, 1): (5145, 1),
    (5153, 1): (5148, 1),
    (5167, 1): (5161, 1),
    (5171, 1): (5169, 1),
    (5179, 1): (5177, 1),
    (5189, 1): (5187, 1),
    (5197, 1): (5190, 1),
    (5209, 1): (5192, 1),
    (5227, 1): (5225, 1),
    (5231, 1): (5224, 1),
    (5233, 1): (5223, 1),
    (5237, 1): (5234, 1),
    (5261, 1): (5259, 1),
    (5273, 1): (5270, 1),
    (5279, 1): (5272, 1),
    (5281, 1): (5274, 1),
    (5297, 1): (5294, 1),
    (5303, 1): (5298, 1),
    (5309, 1): (5307, 1),
    (5323, 1): (5318, 1),
    (5333, 1): (5331, 1),
    (5347, 1): (5344, 1),
    (5351, 1): (5340, 1),
    (5381, 1): (5378, 1),
    (5387, 1): (5385, 1),
    (5393, 1): (5390, 1),
    (5399, 1): (5392, 1),
    (5407, 1): (5404, 1),
    (5413, 1): (5408, 1),
    (5417, 1): (5414, 1),
    (5419, 1): (5416, 1),
    (5431, 1): (5428, 1),
    (5437, 1): (5432, 1),
    (5441, 1): (5438, 1),
    (5443, 1): (5441, 1),
    (5449, 1): (5442, 1),
    (5471, 1): (5464, 1),
    (5477, 1): (5475, 1),
    (5479, 1): (5476, 1),
    (5483, 1): (5481, 1),
    (5501, 1): (5499, 1),
    (5503, 1): (5500, 1),
    (5507, 1): (5505, 1),
    (5519, 1): (5506, 1),
    (5521, 1): (5510, 1),
    (5527, 1): (5522, 1),
    (5531, 1): (5521, 1),
    (5557, 1): (5555, 1),
    (5563, 1): (5561, 1),
    (5569, 1): (5556, 1),
    (5573, 1): (5571, 1),
    (5581, 1): (5575, 1),
    (5591, 1): (5580, 1),
    (5623, 1): (5618, 1),
    (5639, 1): (5632, 1),
    (5641, 1): (5627, 1),
    (5647, 1): (5644, 1),
    (5651, 1): (5649, 1),
    (5653, 1): (5648, 1),
    (5657, 1): (5654, 1),
    (5659, 1): (5657, 1),
    (5669, 1): (5666, 1),
    (5683, 1): (5681, 1),
    (5689, 1): (5678, 1),
    (5693, 1): (5691, 1),
    (5701, 1): (5699, 1),
    (5711, 1): (5692, 1),
    (5717, 1): (5715, 1),
    (5737, 1): (5732, 1),
    (5741, 1): (5739, 1),
    (5743, 1): (5733, 1),
    (5749, 1): (5747, 1),
    (5779, 1): (5777, 1),
    (5783, 1): (5776, 1),
    (5791, 1): (5785, 1),
    (5801, 1): (5798, 1),
    (5807, 1): (5802, 1),
    (5813, 1): (5811, 1),
    (5821, 1): (5815, 1),
    (5827, 1): (5825, 1),
    (5839, 1): (5833, 1),
    (5843, 1): (5841, 1),
    (5849, 1): (5846, 1),
    (5851, 1): (5849, 1),
    (5857, 1): (5850, 1),
    (5861, 1): (5858, 1),
    (5867, 1): (5862, 1),
    (5869, 1): (5867, 1),
    (5879, 1): (5868, 1),
    (5881, 1): (5850, 1),
    (5897, 1): (5894, 1),
    (5903, 1): (5898, 1),
    (5923, 1): (5921, 1),
    (5927, 1): (5922, 1),
    (5939, 1): (5937, 1),
    (5953, 1): (5946, 1),
    (5981, 1): (5978, 1),
    (5987, 1): (5985, 1),
    (6007, 1): (6004, 1),
    (6011, 1): (6009, 1),
    (6029, 1): (6027, 1),
    (6037, 1): (6032, 1),
    (6043, 1): (6038, 1),
    (6047, 1): (6042, 1),
    (6053, 1): (6051, 1),
    (6067, 1): (6065, 1),
    (6073, 1): (6063, 1),
    (6079, 1): (6062, 1),
    (6089, 1): (6086, 1),
    (6091, 1): (6084, 1),
    (6101, 1): (6099, 1),
    (6113, 1): (6110, 1),
    (6121, 1): (6114, 1),
    (6131, 1): (6129, 1),
    (6133, 1): (6128, 1),
    (6143, 1): (6138, 1),
    (6151, 1): (6148, 1),
    (6163, 1): (6160, 1),
    (6173, 1): (6171, 1),
    (6197, 1): (6195, 1),
    (6199, 1): (6196, 1),
    (6203, 1): (6201, 1),
    (6211, 1): (6209, 1),
    (6217, 1): (6212, 1),
    (6221, 1): (6218, 1),
    (6229, 1): (6227, 1),
    (6247, 1): (6242, 1),
    (6257, 1): (6254, 1),
    (6263, 1): (6258, 1),
    (6269, 1): (6267, 1),
    (6271, 1): (6260, 1),
    (6277, 1): (6275, 1),
    (6287, 1): (6280, 1),
    (6299, 1): (6297, 1),
    (6301, 1): (6291, 1),
    (6311, 1): (6304, 1),
    (6317, 1): (6315, 1),
    (6323, 1): (6321, 1),
    (6329, 1): (6326, 1),
    (6337, 1): (6327, 1),
    (6343, 1): (6340, 1),
    (6353, 1): (6350, 1),
    (6359, 1): (6346, 1),
    (6361, 1): (6342, 1),
    (6367, 1): (6364, 1),
    (6373, 1): (6371, 1),
    (6379, 1): (6377, 1),
    (6389, 1): (6387, 1),
    (6397, 1): (6395, 1),
    (6421, 1): (6415, 1),
    (6427, 1): (6424, 1),
    (6449, 1): (6446, 1),
    (6451, 1): (6448, 1),
    (6469, 1): (6467, 1),
    (6473, 1): (6470, 1),
    (6481, 1): (6474, 1),
    (6491, 1): (6489, 1),
    (6521, 1): (6515, 1),
    (6529, 1): (6522, 1),
    (6547, 1): (6545, 1),
    (6551, 1): (6534, 1),
    (6553, 1): (6543, 1),
    (6563, 1): (6558, 1),
    (6569, 1): (6566, 1),
    (6571, 1): (6568, 1),
    (6577, 1): (6572, 1),
    (6581, 1): (6567, 1),
    (6599, 1): (6586, 1),
    (6607, 1): (6604, 1),
    (6619, 1): (6617, 1),
    (6637, 1): (6635, 1),
    (6653, 1): (6651, 1),
    (6659, 1): (6657, 1),
    (6661, 1): (6655, 1),
    (6673, 1): (6668, 1),
    (6679, 1): (6672, 1),
    (6689, 1): (6686, 1),
    (6691, 1): (6689, 1),
    (6701, 1): (6699, 1),
    (6703, 1): (6698, 1),
    (6709, 1): (6707, 1),
    (6719, 1): (6708, 1),
    (6733, 1): (6731, 1),
    (6737, 1): (6734, 1),
    (6761, 1): (6758, 1),
    (6763, 1): (6761, 1),
    (6779, 1): (6777, 1),
    (6781, 1): (6779, 1),
    (6791, 1): (6784, 1),
    (6793, 1): (6783, 1),
    (6803, 1): (6801, 1),
    (6823, 1): (6820, 1),
    (6827, 1): (6825, 1),
    (6829, 1): (6827, 1),
    (6833, 1): (6830, 1),
    (6841, 1): (6819, 1),
    (6857, 1): (6854, 1),
    (6863, 1): (6858, 1),
    (6869, 1): (6867, 1),
    (6871, 1): (6868, 1),
    (6883, 1): (6881, 1),
    (6899, 1): (6897, 1),
    (6907, 1): (6905, 1),
    (6911, 1): (6904, 1),
    (6917, 1): (6915, 1),
    (6947, 1): (6945, 1),
    (6949, 1): (6947, 1),
    (6959, 1): (6952, 1),
    (6961, 1): (6948, 1),
    (6967, 1): (6962, 1),
    (6971, 1): (6969, 1),
    (6977, 1): (6974, 1),
    (6983, 1): (6978, 1),
    (6991, 1): (6985, 1),
    (6997, 1): (6992, 1),
    (7001, 1): (6998, 1),
    (7013, 1): (7011, 1),
    (7019, 1): (7017, 1),
    (7027, 1): (7025, 1),
    (7039, 1): (7036, 1),
    (7043, 1): (7041, 1),
    (7057, 1): (7052, 1),
    (7069, 1): (7067, 1),
    (7079, 1): (7072, 1),
    (7103, 1): (7098, 1),
    (7109, 1): (7107, 1),
    (7121, 1): (7118, 1),
    (7127, 1): (7122, 1),
    (7129, 1): (7122, 1),
    (7151, 1): (7144, 1),
    (7159, 1): (7156, 1),
    (7177, 1): (7167, 1),
    (7187, 1): (7185, 1),
    (7193, 1): (7190, 1),
    (7207, 1): (7204, 1),
    (7211, 1): (7209, 1),
    (7213, 1): (7208, 1),
    (7219, 1): (7217, 1),
    (7229, 1): (7227, 1),
    (7237, 1): (7235, 1),
    (7243, 1): (7241, 1),
    (7247, 1): (7242, 1),
    (7253, 1): (7251, 1),
    (7283, 1): (7281, 1),
    (7297, 1): (7292, 1),
    (7307, 1): (7305, 1),
    (7309, 1): (7303, 1),
    (7321, 1): (7314, 1),
    (7331, 1): (7329, 1),
    (7333, 1): (7327, 1),
    (7349, 1): (7347, 1),
    (7351, 1): (7345, 1),
    (7369, 1): (7362, 1),
    (7393, 1): (7388, 1),
    (7411, 1): (7409, 1),
    (7417, 1): (7412, 1),
    (7433, 1): (7430, 1),
    (7451, 1): (7449, 1),
    (7457, 1): (7454, 1),
    (7459, 1): (7457, 1),
    (7477, 1): (7475, 1),
    (7481, 1): (7475, 1),
    (7487, 1): (7482, 1),
    (7489, 1): (7482, 1),
    (7499, 1): (7497, 1),
    (7507, 1): (7505, 1),
    (7517, 1): (7515, 1),
    (7523, 1): (7521, 1),
    (7529, 1): (7526, 1),
    (7537, 1): (7530, 1),
    (7541, 1): (7539, 1),
    (7547, 1): (7545, 1),
    (7549, 1): (7547, 1),
    (7559, 1): (7546, 1),
    (7561, 1): (7548, 1),
    (7573, 1): (7571, 1),
    (7577, 1): (7574, 1),
    (7583, 1): (7578, 1),
    (7589, 1): (7587, 1),
    (7591, 1): (7585, 1),
    (7603, 1): (7601, 1),
    (7607, 1): (7602, 1),
    (7621, 1): (7619, 1),
    (7639, 1): (7632, 1),
    (7643, 1): (7641, 1),
    (7649, 1): (7646, 1),
    (7669, 1): (7667, 1),
    (7673, 1): (7670, 1),
    (7681, 1): (7664, 1),
    (7687, 1): (7681, 1),
    (7691, 1): (7689, 1),
    (7699, 1): (7696, 1),
    (7703, 1): (7698, 1),
    (7717, 1): (7715, 1),
    (7723, 1): (7720, 1),
    (7727, 1): (7722, 1),
    (7741, 1): (7734, 1),
    (7753, 1): (7743, 1),
    (7757, 1): (7755, 1),
    (7759, 1): (7756, 1),
    (7789, 1): (7787, 1),
    (7793, 1): (7790, 1),
    (7817, 1): (7814, 1),
    (7823, 1): (7818, 1),
    (7829, 1): (7827, 1),
    (7841, 1): (7829, 1),
    (7853, 1): (7851, 1),
    (7867, 1): (7864, 1),
    (7873, 1): (7868, 1),
    (7877, 1): (7875, 1),
    (7879, 1): (7876, 1),
    (7883, 1): (7881, 1),
    (7901, 1): (7899, 1),
    (7907, 1): (7905, 1),
    (7919, 1): (7912, 1),
    (7927, 1): (7924, 1),
    (7933, 1): (7931, 1),
    (7937, 1): (7934, 1),
    (7949, 1): (7947, 1),
    (7951, 1): (7945, 1),
    (7963, 1): (7958, 1),
    (7993, 1): (7988, 1),
    (8009, 1): (8006, 1),
    (8011, 1): (7997, 1),
    (8017, 1): (8012, 1),
    (8039, 1): (8028, 1),
    (8053, 1): (8051, 1),
    (8059, 1): (8056, 1),
    (8069, 1): (8067, 1),
    (8081, 1): (8078, 1),
    (8087, 1): (8082, 1),
    (8089, 1): (8072, 1),
    (8093, 1): (8091, 1),
    (8101, 1): (8095, 1),
    (8111, 1): (8100, 1),
    (8117, 1): (8115, 1),
    (8123, 1): (8121, 1),
    (8147, 1): (8145, 1),
    (8161, 1): (8154, 1),
    (8167, 1): (8164, 1),
    (8171, 1): (8169, 1),
    (8179, 1): (8177, 1),
    (8191, 1): (8174, 1),
}
