//! Shipped catalog files, compiled in.

pub(crate) const FILES: &[(&str, &str)] = &[
    ("5_1", include_str!("../../catalog/5_1.btt")),
    ("5_1.tangle", include_str!("../../catalog/5_1.tangle.btt")),
    ("5_2", include_str!("../../catalog/5_2.btt")),
    ("5_2.tangle", include_str!("../../catalog/5_2.tangle.btt")),
    ("6_1", include_str!("../../catalog/6_1.btt")),
    ("6_1.tangle", include_str!("../../catalog/6_1.tangle.btt")),
    ("6_2", include_str!("../../catalog/6_2.btt")),
    ("6_2.tangle", include_str!("../../catalog/6_2.tangle.btt")),
    ("6_3", include_str!("../../catalog/6_3.btt")),
    ("6_3.tangle", include_str!("../../catalog/6_3.tangle.btt")),
    ("7_1", include_str!("../../catalog/7_1.btt")),
    ("7_1.tangle", include_str!("../../catalog/7_1.tangle.btt")),
    ("7_2", include_str!("../../catalog/7_2.btt")),
    ("7_2.tangle", include_str!("../../catalog/7_2.tangle.btt")),
    ("borromean+", include_str!("../../catalog/borromean+.btt")),
    ("borromean+.tangle", include_str!("../../catalog/borromean+.tangle.btt")),
    ("borromean-", include_str!("../../catalog/borromean-.btt")),
    ("borromean-.tangle", include_str!("../../catalog/borromean-.tangle.btt")),
    ("figure8", include_str!("../../catalog/figure8.btt")),
    ("figure8.tangle", include_str!("../../catalog/figure8.tangle.btt")),
    ("granny", include_str!("../../catalog/granny.btt")),
    ("granny.tangle", include_str!("../../catalog/granny.tangle.btt")),
    ("hopf+", include_str!("../../catalog/hopf+.btt")),
    ("hopf+.tangle", include_str!("../../catalog/hopf+.tangle.btt")),
    ("hopf-", include_str!("../../catalog/hopf-.btt")),
    ("hopf-.tangle", include_str!("../../catalog/hopf-.tangle.btt")),
    ("nu_12+.n2", include_str!("../../catalog/nu_12+.n2.btt")),
    ("nu_12+.n3", include_str!("../../catalog/nu_12+.n3.btt")),
    ("nu_12-.n2", include_str!("../../catalog/nu_12-.n2.btt")),
    ("nu_12-.n3", include_str!("../../catalog/nu_12-.n3.btt")),
    ("nu_13+.n3", include_str!("../../catalog/nu_13+.n3.btt")),
    ("nu_13-.n3", include_str!("../../catalog/nu_13-.n3.btt")),
    ("nu_21+.n2", include_str!("../../catalog/nu_21+.n2.btt")),
    ("nu_21+.n3", include_str!("../../catalog/nu_21+.n3.btt")),
    ("nu_21-.n2", include_str!("../../catalog/nu_21-.n2.btt")),
    ("nu_21-.n3", include_str!("../../catalog/nu_21-.n3.btt")),
    ("nu_23+.n3", include_str!("../../catalog/nu_23+.n3.btt")),
    ("nu_23-.n3", include_str!("../../catalog/nu_23-.n3.btt")),
    ("nu_31+.n3", include_str!("../../catalog/nu_31+.n3.btt")),
    ("nu_31-.n3", include_str!("../../catalog/nu_31-.n3.btt")),
    ("nu_32+.n3", include_str!("../../catalog/nu_32+.n3.btt")),
    ("nu_32-.n3", include_str!("../../catalog/nu_32-.n3.btt")),
    ("square", include_str!("../../catalog/square.btt")),
    ("square.tangle", include_str!("../../catalog/square.tangle.btt")),
    ("tau_12+.n2", include_str!("../../catalog/tau_12+.n2.btt")),
    ("tau_12+.n3", include_str!("../../catalog/tau_12+.n3.btt")),
    ("tau_12-.n2", include_str!("../../catalog/tau_12-.n2.btt")),
    ("tau_12-.n3", include_str!("../../catalog/tau_12-.n3.btt")),
    ("tau_13+.n3", include_str!("../../catalog/tau_13+.n3.btt")),
    ("tau_13-.n3", include_str!("../../catalog/tau_13-.n3.btt")),
    ("tau_21+.n2", include_str!("../../catalog/tau_21+.n2.btt")),
    ("tau_21+.n3", include_str!("../../catalog/tau_21+.n3.btt")),
    ("tau_21-.n2", include_str!("../../catalog/tau_21-.n2.btt")),
    ("tau_21-.n3", include_str!("../../catalog/tau_21-.n3.btt")),
    ("tau_23+.n3", include_str!("../../catalog/tau_23+.n3.btt")),
    ("tau_23-.n3", include_str!("../../catalog/tau_23-.n3.btt")),
    ("tau_31+.n3", include_str!("../../catalog/tau_31+.n3.btt")),
    ("tau_31-.n3", include_str!("../../catalog/tau_31-.n3.btt")),
    ("tau_32+.n3", include_str!("../../catalog/tau_32+.n3.btt")),
    ("tau_32-.n3", include_str!("../../catalog/tau_32-.n3.btt")),
    ("torus3_4", include_str!("../../catalog/torus3_4.btt")),
    ("torus3_4.tangle", include_str!("../../catalog/torus3_4.tangle.btt")),
    ("trefoil+", include_str!("../../catalog/trefoil+.btt")),
    ("trefoil+.tangle", include_str!("../../catalog/trefoil+.tangle.btt")),
    ("trefoil-", include_str!("../../catalog/trefoil-.btt")),
    ("trefoil-.tangle", include_str!("../../catalog/trefoil-.tangle.btt")),
    ("unknot", include_str!("../../catalog/unknot.btt")),
    ("unknot.tangle", include_str!("../../catalog/unknot.tangle.btt")),
    ("unknot_braid", include_str!("../../catalog/unknot_braid.btt")),
    ("unknot_braid.tangle", include_str!("../../catalog/unknot_braid.tangle.btt")),
    ("whitehead", include_str!("../../catalog/whitehead.btt")),
    ("whitehead.tangle", include_str!("../../catalog/whitehead.tangle.btt")),
];
