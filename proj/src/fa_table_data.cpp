// Generated by tools/fa_table_gen; do not edit by hand.
// samples=4000000 n=4096 seed=20260515 z_max=12

namespace sphstat::radial::fa_data {

extern const double kKnots[][2];
extern const unsigned kKnotCount;

const double kKnots[][2] = {
    {0, 0},
    {0.005, 0},
    {0.01, 0},
    {0.015, 0},
    {0.02, 0},
    {0.025, 0},
    {0.03, 0},
    {0.035, 0},
    {0.04, 0},
    {0.045, 0},
    {0.05, 0},
    {0.055, 0},
    {0.06, 0},
    {0.065, 0},
    {0.07, 0},
    {0.075, 5e-07},
    {0.08, 1.25e-06},
    {0.085, 2.5e-06},
    {0.09, 6.75e-06},
    {0.095, 1.45e-05},
    {0.1, 2.825e-05},
    {0.105, 5.425e-05},
    {0.11, 8.55e-05},
    {0.115, 0.000138},
    {0.12, 0.0002105},
    {0.125, 0.00031175},
    {0.13, 0.0004375},
    {0.135, 0.000604},
    {0.14, 0.00082175},
    {0.145, 0.0011045},
    {0.15, 0.001445},
    {0.155, 0.00184675},
    {0.16, 0.0023275},
    {0.165, 0.00288025},
    {0.17, 0.00352575},
    {0.175, 0.00425775},
    {0.18, 0.00511775},
    {0.185, 0.00608725},
    {0.19, 0.0071465},
    {0.195, 0.0083435},
    {0.2, 0.009648},
    {0.205, 0.011104},
    {0.21, 0.01265675},
    {0.215, 0.01431175},
    {0.22, 0.01612475},
    {0.225, 0.018063},
    {0.23, 0.020086},
    {0.235, 0.0222565},
    {0.24, 0.02459575},
    {0.245, 0.02707875},
    {0.25, 0.02967475},
    {0.255, 0.0324365},
    {0.26, 0.03530125},
    {0.265, 0.0382495},
    {0.27, 0.04126725},
    {0.275, 0.044491},
    {0.28, 0.047762},
    {0.285, 0.0511235},
    {0.29, 0.0546015},
    {0.295, 0.05826475},
    {0.3, 0.06197125},
    {0.305, 0.06582675},
    {0.31, 0.06974},
    {0.315, 0.07375325},
    {0.32, 0.0778105},
    {0.325, 0.0819475},
    {0.33, 0.0861285},
    {0.335, 0.090435},
    {0.34, 0.09482675},
    {0.345, 0.09924},
    {0.35, 0.10374475},
    {0.355, 0.1083205},
    {0.36, 0.112913},
    {0.365, 0.1175545},
    {0.37, 0.1221765},
    {0.375, 0.1269225},
    {0.38, 0.1317685},
    {0.385, 0.136624},
    {0.39, 0.14148675},
    {0.395, 0.146418},
    {0.4, 0.1514},
    {0.405, 0.15636375},
    {0.41, 0.16137325},
    {0.415, 0.166416},
    {0.42, 0.17147425},
    {0.425, 0.17650025},
    {0.43, 0.1816265},
    {0.435, 0.186754},
    {0.44, 0.19186925},
    {0.445, 0.19699975},
    {0.45, 0.20211425},
    {0.455, 0.207181},
    {0.46, 0.21228425},
    {0.465, 0.2174145},
    {0.47, 0.22256425},
    {0.475, 0.2277035},
    {0.48, 0.23274175},
    {0.485, 0.23782625},
    {0.49, 0.242959},
    {0.495, 0.2481025},
    {0.5, 0.2532455},
    {0.505, 0.25841175},
    {0.51, 0.26351825},
    {0.515, 0.2686045},
    {0.52, 0.2736825},
    {0.525, 0.27868425},
    {0.53, 0.2837135},
    {0.535, 0.2887085},
    {0.54, 0.293687},
    {0.545, 0.2986865},
    {0.55, 0.30369075},
    {0.555, 0.30860075},
    {0.56, 0.31351325},
    {0.565, 0.31841875},
    {0.57, 0.32325325},
    {0.575, 0.32817425},
    {0.58, 0.33300625},
    {0.585, 0.33787425},
    {0.59, 0.342677},
    {0.595, 0.3474815},
    {0.6, 0.35225475},
    {0.605, 0.35692375},
    {0.61, 0.36160425},
    {0.615, 0.3662715},
    {0.62, 0.37086475},
    {0.625, 0.37547225},
    {0.63, 0.379998},
    {0.635, 0.38451175},
    {0.64, 0.38902975},
    {0.645, 0.393534},
    {0.65, 0.398018},
    {0.655, 0.40248},
    {0.66, 0.40688675},
    {0.665, 0.4112635},
    {0.67, 0.41562325},
    {0.675, 0.41997825},
    {0.68, 0.424291},
    {0.685, 0.42847425},
    {0.69, 0.43272775},
    {0.695, 0.43699625},
    {0.7, 0.44116875},
    {0.705, 0.44534425},
    {0.71, 0.4494325},
    {0.715, 0.45356975},
    {0.72, 0.4576445},
    {0.725, 0.46168925},
    {0.73, 0.46570675},
    {0.735, 0.46970025},
    {0.74, 0.47360175},
    {0.745, 0.47753775},
    {0.75, 0.48144525},
    {0.755, 0.4853085},
    {0.76, 0.48912725},
    {0.765, 0.49295725},
    {0.77, 0.496738},
    {0.775, 0.500464},
    {0.78, 0.50426025},
    {0.785, 0.50793975},
    {0.79, 0.51163525},
    {0.795, 0.5152125},
    {0.8, 0.5188675},
    {0.805, 0.5224665},
    {0.81, 0.52600625},
    {0.815, 0.52962175},
    {0.82, 0.5331295},
    {0.825, 0.536552},
    {0.83, 0.54002375},
    {0.835, 0.5434585},
    {0.84, 0.546801},
    {0.845, 0.55014975},
    {0.85, 0.55352725},
    {0.855, 0.556836},
    {0.86, 0.560102},
    {0.865, 0.5633215},
    {0.87, 0.56658075},
    {0.875, 0.56981225},
    {0.88, 0.57299825},
    {0.885, 0.57617},
    {0.89, 0.57933325},
    {0.895, 0.5824265},
    {0.9, 0.58554625},
    {0.905, 0.588641},
    {0.91, 0.59165125},
    {0.915, 0.59464275},
    {0.92, 0.5976325},
    {0.925, 0.60069325},
    {0.93, 0.6036235},
    {0.935, 0.6065515},
    {0.94, 0.60944075},
    {0.945, 0.6123255},
    {0.95, 0.61519725},
    {0.955, 0.61802075},
    {0.96, 0.620815},
    {0.965, 0.6236335},
    {0.97, 0.62637475},
    {0.975, 0.629096},
    {0.98, 0.63182175},
    {0.985, 0.6345235},
    {0.99, 0.63719325},
    {0.995, 0.63985275},
    {1, 0.642524},
    {1.005, 0.645151},
    {1.01, 0.64774525},
    {1.015, 0.65037},
    {1.02, 0.65292175},
    {1.025, 0.655443},
    {1.03, 0.6579455},
    {1.035, 0.66044475},
    {1.04, 0.6629195},
    {1.045, 0.66540425},
    {1.05, 0.66783825},
    {1.055, 0.67026025},
    {1.06, 0.672665},
    {1.065, 0.67506},
    {1.07, 0.677413},
    {1.075, 0.67979325},
    {1.08, 0.6821225},
    {1.085, 0.684403},
    {1.09, 0.68665525},
    {1.095, 0.68892775},
    {1.1, 0.69117475},
    {1.105, 0.69338675},
    {1.11, 0.69561625},
    {1.115, 0.6978055},
    {1.12, 0.69996025},
    {1.125, 0.70209675},
    {1.13, 0.7042315},
    {1.135, 0.70633225},
    {1.14, 0.70843575},
    {1.145, 0.7104915},
    {1.15, 0.71251625},
    {1.155, 0.71461525},
    {1.16, 0.71662425},
    {1.165, 0.7186815},
    {1.17, 0.72071125},
    {1.175, 0.7227115},
    {1.18, 0.72470375},
    {1.185, 0.726662},
    {1.19, 0.72862025},
    {1.195, 0.730519},
    {1.2, 0.73246425},
    {1.205, 0.73436625},
    {1.21, 0.7362445},
    {1.215, 0.73812075},
    {1.22, 0.739942},
    {1.225, 0.74175475},
    {1.23, 0.743594},
    {1.235, 0.74538275},
    {1.24, 0.74717075},
    {1.245, 0.748933},
    {1.25, 0.750703},
    {1.255, 0.75243},
    {1.26, 0.75415125},
    {1.265, 0.75586025},
    {1.27, 0.7575775},
    {1.275, 0.759247},
    {1.28, 0.76090025},
    {1.285, 0.762551},
    {1.29, 0.764186},
    {1.295, 0.76583425},
    {1.3, 0.76749375},
    {1.305, 0.7691275},
    {1.31, 0.77074},
    {1.315, 0.77233425},
    {1.32, 0.77390575},
    {1.325, 0.77546975},
    {1.33, 0.777004},
    {1.335, 0.77854925},
    {1.34, 0.78007325},
    {1.345, 0.78159325},
    {1.35, 0.7831285},
    {1.355, 0.78463},
    {1.36, 0.7861},
    {1.365, 0.78754825},
    {1.37, 0.78900575},
    {1.375, 0.790483},
    {1.38, 0.7919045},
    {1.385, 0.79334625},
    {1.39, 0.794803},
    {1.395, 0.79616675},
    {1.4, 0.79756275},
    {1.405, 0.798945},
    {1.41, 0.80029475},
    {1.415, 0.80163475},
    {1.42, 0.80297925},
    {1.425, 0.804337},
    {1.43, 0.80564625},
    {1.435, 0.8069715},
    {1.44, 0.80826875},
    {1.445, 0.8095465},
    {1.45, 0.8108335},
    {1.455, 0.81212575},
    {1.46, 0.81341475},
    {1.465, 0.814716},
    {1.47, 0.81596925},
    {1.475, 0.81721425},
    {1.48, 0.8184625},
    {1.485, 0.81966025},
    {1.49, 0.82088625},
    {1.495, 0.822095},
    {1.5, 0.82325875},
    {1.505, 0.82444325},
    {1.51, 0.8256435},
    {1.515, 0.826834},
    {1.52, 0.82800875},
    {1.525, 0.829141},
    {1.53, 0.8303205},
    {1.535, 0.83142425},
    {1.54, 0.8325585},
    {1.545, 0.833661},
    {1.55, 0.83479575},
    {1.555, 0.835879},
    {1.56, 0.83695125},
    {1.565, 0.83804375},
    {1.57, 0.8391075},
    {1.575, 0.84017025},
    {1.58, 0.8412465},
    {1.585, 0.8423155},
    {1.59, 0.8433555},
    {1.595, 0.84438175},
    {1.6, 0.84539625},
    {1.605, 0.84645},
    {1.61, 0.8474545},
    {1.615, 0.848433},
    {1.62, 0.84945725},
    {1.625, 0.85043425},
    {1.63, 0.851442},
    {1.635, 0.8524015},
    {1.64, 0.85336075},
    {1.645, 0.8543195},
    {1.65, 0.85528675},
    {1.655, 0.85621375},
    {1.66, 0.85720125},
    {1.665, 0.85811475},
    {1.67, 0.85902675},
    {1.675, 0.859948},
    {1.68, 0.860864},
    {1.685, 0.86176925},
    {1.69, 0.86268075},
    {1.695, 0.86356825},
    {1.7, 0.864454},
    {1.705, 0.86533775},
    {1.71, 0.866232},
    {1.715, 0.86712225},
    {1.72, 0.867984},
    {1.725, 0.86884925},
    {1.73, 0.8697005},
    {1.735, 0.87057325},
    {1.74, 0.87140375},
    {1.745, 0.87225875},
    {1.75, 0.8731025},
    {1.755, 0.87392125},
    {1.76, 0.87471875},
    {1.765, 0.875554},
    {1.77, 0.87633175},
    {1.775, 0.8771305},
    {1.78, 0.87793125},
    {1.785, 0.8786995},
    {1.79, 0.8794745},
    {1.795, 0.88028825},
    {1.8, 0.881089},
    {1.805, 0.8818495},
    {1.81, 0.88261525},
    {1.815, 0.88337275},
    {1.82, 0.88411475},
    {1.825, 0.88485475},
    {1.83, 0.88559575},
    {1.835, 0.8862875},
    {1.84, 0.8870595},
    {1.845, 0.88778525},
    {1.85, 0.8884915},
    {1.855, 0.8891935},
    {1.86, 0.88990225},
    {1.865, 0.8906095},
    {1.87, 0.8912995},
    {1.875, 0.89199725},
    {1.88, 0.892694},
    {1.885, 0.89337675},
    {1.89, 0.89407125},
    {1.895, 0.89472275},
    {1.9, 0.895395},
    {1.905, 0.89605825},
    {1.91, 0.8967135},
    {1.915, 0.89739525},
    {1.92, 0.8980425},
    {1.925, 0.8986935},
    {1.93, 0.8993645},
    {1.935, 0.8999845},
    {1.94, 0.9006035},
    {1.945, 0.901244},
    {1.95, 0.9018705},
    {1.955, 0.90250175},
    {1.96, 0.90313125},
    {1.965, 0.9037365},
    {1.97, 0.904351},
    {1.975, 0.90496025},
    {1.98, 0.9055595},
    {1.985, 0.90614925},
    {1.99, 0.90673875},
    {1.995, 0.90734},
    {2, 0.90793175},
    {2.005, 0.9085255},
    {2.01, 0.909115},
    {2.015, 0.90968975},
    {2.02, 0.910245},
    {2.025, 0.9108105},
    {2.03, 0.91136375},
    {2.035, 0.91191825},
    {2.04, 0.91246725},
    {2.045, 0.91306625},
    {2.05, 0.91361075},
    {2.055, 0.914148},
    {2.06, 0.91469975},
    {2.065, 0.91524025},
    {2.07, 0.9157675},
    {2.075, 0.91628225},
    {2.08, 0.916825},
    {2.085, 0.9173485},
    {2.09, 0.91786625},
    {2.095, 0.91838875},
    {2.1, 0.918908},
    {2.105, 0.91940125},
    {2.11, 0.91991525},
    {2.115, 0.920411},
    {2.12, 0.920907},
    {2.125, 0.9213975},
    {2.13, 0.921878},
    {2.135, 0.922361},
    {2.14, 0.92285225},
    {2.145, 0.92333075},
    {2.15, 0.9238105},
    {2.155, 0.9242845},
    {2.16, 0.92476075},
    {2.165, 0.925241},
    {2.17, 0.92570925},
    {2.175, 0.9261625},
    {2.18, 0.92661525},
    {2.185, 0.92708275},
    {2.19, 0.92753875},
    {2.195, 0.92797275},
    {2.2, 0.92842025},
    {2.205, 0.9288795},
    {2.21, 0.9293225},
    {2.215, 0.929733},
    {2.22, 0.930133},
    {2.225, 0.9305665},
    {2.23, 0.93100375},
    {2.235, 0.931432},
    {2.24, 0.931865},
    {2.245, 0.93228675},
    {2.25, 0.93270125},
    {2.255, 0.93313175},
    {2.26, 0.9335485},
    {2.265, 0.93394425},
    {2.27, 0.93433175},
    {2.275, 0.9347305},
    {2.28, 0.9351225},
    {2.285, 0.93551975},
    {2.29, 0.935903},
    {2.295, 0.93630675},
    {2.3, 0.9366705},
    {2.305, 0.93709175},
    {2.31, 0.9374745},
    {2.315, 0.937859},
    {2.32, 0.938229},
    {2.325, 0.9386055},
    {2.33, 0.93899175},
    {2.335, 0.9393695},
    {2.34, 0.9397285},
    {2.345, 0.94010125},
    {2.35, 0.94043825},
    {2.355, 0.9408045},
    {2.36, 0.941174},
    {2.365, 0.9415515},
    {2.37, 0.94191075},
    {2.375, 0.942251},
    {2.38, 0.942627},
    {2.385, 0.9429765},
    {2.39, 0.943329},
    {2.395, 0.94367125},
    {2.4, 0.94400475},
    {2.405, 0.9443555},
    {2.41, 0.94469925},
    {2.415, 0.9450315},
    {2.42, 0.94536525},
    {2.425, 0.9457035},
    {2.43, 0.946008},
    {2.435, 0.9463305},
    {2.44, 0.94668},
    {2.445, 0.94697975},
    {2.45, 0.947302},
    {2.455, 0.947622},
    {2.46, 0.94793825},
    {2.465, 0.948248},
    {2.47, 0.948558},
    {2.475, 0.948881},
    {2.48, 0.9491925},
    {2.485, 0.949494},
    {2.49, 0.94980625},
    {2.495, 0.95010725},
    {2.5, 0.95041025},
    {2.505, 0.9507},
    {2.51, 0.95099225},
    {2.515, 0.95127725},
    {2.52, 0.951563},
    {2.525, 0.95184575},
    {2.53, 0.95214},
    {2.535, 0.95242125},
    {2.54, 0.952694},
    {2.545, 0.952983},
    {2.55, 0.95326075},
    {2.555, 0.95354375},
    {2.56, 0.953814},
    {2.565, 0.9540745},
    {2.57, 0.95436575},
    {2.575, 0.95464275},
    {2.58, 0.95490325},
    {2.585, 0.9551765},
    {2.59, 0.955451},
    {2.595, 0.95572325},
    {2.6, 0.9559975},
    {2.605, 0.95626525},
    {2.61, 0.95652025},
    {2.615, 0.95677825},
    {2.62, 0.957039},
    {2.625, 0.95730325},
    {2.63, 0.95755825},
    {2.635, 0.9577975},
    {2.64, 0.95805125},
    {2.645, 0.95830375},
    {2.65, 0.95855625},
    {2.655, 0.9588015},
    {2.66, 0.95905825},
    {2.665, 0.95930175},
    {2.67, 0.95953125},
    {2.675, 0.9597725},
    {2.68, 0.96000575},
    {2.685, 0.9602505},
    {2.69, 0.960474},
    {2.695, 0.96072325},
    {2.7, 0.9609735},
    {2.705, 0.96119675},
    {2.71, 0.96143125},
    {2.715, 0.9616585},
    {2.72, 0.9618985},
    {2.725, 0.962111},
    {2.73, 0.9623245},
    {2.735, 0.96254525},
    {2.74, 0.9627635},
    {2.745, 0.9629665},
    {2.75, 0.96317375},
    {2.755, 0.96339625},
    {2.76, 0.963621},
    {2.765, 0.9638445},
    {2.77, 0.964061},
    {2.775, 0.9642655},
    {2.78, 0.964475},
    {2.785, 0.9646685},
    {2.79, 0.964872},
    {2.795, 0.96508025},
    {2.8, 0.96528575},
    {2.805, 0.96548725},
    {2.81, 0.9656935},
    {2.815, 0.96589925},
    {2.82, 0.9661055},
    {2.825, 0.96631675},
    {2.83, 0.9665175},
    {2.835, 0.9667175},
    {2.84, 0.966904},
    {2.845, 0.967098},
    {2.85, 0.967296},
    {2.855, 0.967487},
    {2.86, 0.967682},
    {2.865, 0.96786025},
    {2.87, 0.96805525},
    {2.875, 0.96823275},
    {2.88, 0.96841775},
    {2.885, 0.9686035},
    {2.89, 0.96878275},
    {2.895, 0.96896225},
    {2.9, 0.96914375},
    {2.905, 0.96932675},
    {2.91, 0.969519},
    {2.915, 0.96970575},
    {2.92, 0.96988625},
    {2.925, 0.9700635},
    {2.93, 0.9702405},
    {2.935, 0.97041075},
    {2.94, 0.970592},
    {2.945, 0.97076675},
    {2.95, 0.97093},
    {2.955, 0.971097},
    {2.96, 0.97125525},
    {2.965, 0.97143},
    {2.97, 0.971593},
    {2.975, 0.97175725},
    {2.98, 0.971927},
    {2.985, 0.97209075},
    {2.99, 0.972263},
    {2.995, 0.9724225},
    {3, 0.97256875},
    {3.005, 0.97272675},
    {3.01, 0.9728945},
    {3.015, 0.97305525},
    {3.02, 0.97321525},
    {3.025, 0.97337025},
    {3.03, 0.9735185},
    {3.035, 0.973663},
    {3.04, 0.973831},
    {3.045, 0.973996},
    {3.05, 0.97415025},
    {3.055, 0.974303},
    {3.06, 0.9744385},
    {3.065, 0.97459425},
    {3.07, 0.974733},
    {3.075, 0.97487475},
    {3.08, 0.9750205},
    {3.085, 0.97515425},
    {3.09, 0.975299},
    {3.095, 0.9754375},
    {3.1, 0.97558075},
    {3.105, 0.97572125},
    {3.11, 0.9758585},
    {3.115, 0.97600275},
    {3.12, 0.9761485},
    {3.125, 0.97628825},
    {3.13, 0.9764305},
    {3.135, 0.9765755},
    {3.14, 0.97670875},
    {3.145, 0.9768395},
    {3.15, 0.97697575},
    {3.155, 0.97710575},
    {3.16, 0.97722275},
    {3.165, 0.97735175},
    {3.17, 0.97747475},
    {3.175, 0.97760475},
    {3.18, 0.97774225},
    {3.185, 0.9778795},
    {3.19, 0.97800775},
    {3.195, 0.9781355},
    {3.2, 0.978262},
    {3.205, 0.978395},
    {3.21, 0.97852775},
    {3.215, 0.97864925},
    {3.22, 0.9787695},
    {3.225, 0.97888675},
    {3.23, 0.979006},
    {3.235, 0.979139},
    {3.24, 0.979264},
    {3.245, 0.979382},
    {3.25, 0.9794935},
    {3.255, 0.9796135},
    {3.26, 0.979728},
    {3.265, 0.97985275},
    {3.27, 0.979971},
    {3.275, 0.980085},
    {3.28, 0.98020225},
    {3.285, 0.9803135},
    {3.29, 0.9804285},
    {3.295, 0.9805365},
    {3.3, 0.9806395},
    {3.305, 0.9807565},
    {3.31, 0.98087325},
    {3.315, 0.98098},
    {3.32, 0.9811025},
    {3.325, 0.98120375},
    {3.33, 0.9813185},
    {3.335, 0.98142825},
    {3.34, 0.98154025},
    {3.345, 0.98164875},
    {3.35, 0.98175025},
    {3.355, 0.981856},
    {3.36, 0.98196525},
    {3.365, 0.98207325},
    {3.37, 0.982167},
    {3.375, 0.98227025},
    {3.38, 0.982371},
    {3.385, 0.982474},
    {3.39, 0.98256375},
    {3.395, 0.98267325},
    {3.4, 0.98277625},
    {3.405, 0.98286925},
    {3.41, 0.98296775},
    {3.415, 0.98307475},
    {3.42, 0.9831665},
    {3.425, 0.98326225},
    {3.43, 0.98335725},
    {3.435, 0.983462},
    {3.44, 0.98355775},
    {3.445, 0.98364825},
    {3.45, 0.9837345},
    {3.455, 0.98382275},
    {3.46, 0.9839165},
    {3.465, 0.98400275},
    {3.47, 0.9840925},
    {3.475, 0.984182},
    {3.48, 0.98426525},
    {3.485, 0.98435325},
    {3.49, 0.984441},
    {3.495, 0.98453075},
    {3.5, 0.9846155},
    {3.505, 0.98470075},
    {3.51, 0.98478275},
    {3.515, 0.98487225},
    {3.52, 0.9849525},
    {3.525, 0.985039},
    {3.53, 0.98512575},
    {3.535, 0.9852035},
    {3.54, 0.985289},
    {3.545, 0.9853675},
    {3.55, 0.98544475},
    {3.555, 0.98552475},
    {3.56, 0.9856135},
    {3.565, 0.985689},
    {3.57, 0.98577},
    {3.575, 0.985853},
    {3.58, 0.98593775},
    {3.585, 0.98601075},
    {3.59, 0.98609075},
    {3.595, 0.98617325},
    {3.6, 0.98626225},
    {3.605, 0.98633875},
    {3.61, 0.98642225},
    {3.615, 0.98650525},
    {3.62, 0.986582},
    {3.625, 0.98666375},
    {3.63, 0.98673775},
    {3.635, 0.98681025},
    {3.64, 0.986886},
    {3.645, 0.98696275},
    {3.65, 0.987035},
    {3.655, 0.987108},
    {3.66, 0.987174},
    {3.665, 0.987251},
    {3.67, 0.98731475},
    {3.675, 0.987386},
    {3.68, 0.987456},
    {3.685, 0.987525},
    {3.69, 0.98760025},
    {3.695, 0.987665},
    {3.7, 0.9877305},
    {3.705, 0.9877985},
    {3.71, 0.9878655},
    {3.715, 0.987934},
    {3.72, 0.98800375},
    {3.725, 0.98806875},
    {3.73, 0.9881375},
    {3.735, 0.988205},
    {3.74, 0.9882685},
    {3.745, 0.9883265},
    {3.75, 0.98838825},
    {3.755, 0.9884585},
    {3.76, 0.98851275},
    {3.765, 0.9885785},
    {3.77, 0.9886335},
    {3.775, 0.988697},
    {3.78, 0.98876175},
    {3.785, 0.98882775},
    {3.79, 0.98889225},
    {3.795, 0.98895175},
    {3.8, 0.9890185},
    {3.805, 0.98907725},
    {3.81, 0.989135},
    {3.815, 0.9891985},
    {3.82, 0.98925875},
    {3.825, 0.9893245},
    {3.83, 0.98938225},
    {3.835, 0.989442},
    {3.84, 0.9894985},
    {3.845, 0.989563},
    {3.85, 0.9896185},
    {3.855, 0.98968},
    {3.86, 0.98974425},
    {3.865, 0.9898025},
    {3.87, 0.989859},
    {3.875, 0.989918},
    {3.88, 0.989973},
    {3.885, 0.9900345},
    {3.89, 0.990094},
    {3.895, 0.99015525},
    {3.9, 0.99021175},
    {3.905, 0.99027325},
    {3.91, 0.9903295},
    {3.915, 0.9903775},
    {3.92, 0.99043425},
    {3.925, 0.99048475},
    {3.93, 0.99053175},
    {3.935, 0.99058775},
    {3.94, 0.99064175},
    {3.945, 0.99069175},
    {3.95, 0.9907425},
    {3.955, 0.990793},
    {3.96, 0.99084425},
    {3.965, 0.99089425},
    {3.97, 0.9909455},
    {3.975, 0.990995},
    {3.98, 0.991047},
    {3.985, 0.9910955},
    {3.99, 0.99114775},
    {3.995, 0.99119775},
    {4, 0.99124775},
    {4.005, 0.9912965},
    {4.01, 0.9913455},
    {4.015, 0.9913975},
    {4.02, 0.99144025},
    {4.025, 0.9914875},
    {4.03, 0.99153925},
    {4.035, 0.991584},
    {4.04, 0.991636},
    {4.045, 0.991684},
    {4.05, 0.9917285},
    {4.055, 0.99177275},
    {4.06, 0.991821},
    {4.065, 0.99186375},
    {4.07, 0.9919105},
    {4.075, 0.99195725},
    {4.08, 0.9920015},
    {4.085, 0.99204725},
    {4.09, 0.99209325},
    {4.095, 0.99214},
    {4.1, 0.992186},
    {4.105, 0.99223575},
    {4.11, 0.99227725},
    {4.115, 0.99231825},
    {4.12, 0.99236175},
    {4.125, 0.9924075},
    {4.13, 0.99244875},
    {4.135, 0.9924955},
    {4.14, 0.9925385},
    {4.145, 0.99258625},
    {4.15, 0.9926295},
    {4.155, 0.99267375},
    {4.16, 0.9927145},
    {4.165, 0.9927545},
    {4.17, 0.99279475},
    {4.175, 0.992838},
    {4.18, 0.99288},
    {4.185, 0.992921},
    {4.19, 0.992955},
    {4.195, 0.992995},
    {4.2, 0.9930345},
    {4.205, 0.993074},
    {4.21, 0.993112},
    {4.215, 0.9931515},
    {4.22, 0.99319375},
    {4.225, 0.993232},
    {4.23, 0.9932675},
    {4.235, 0.9933065},
    {4.24, 0.99334125},
    {4.245, 0.9933705},
    {4.25, 0.99340825},
    {4.255, 0.99344825},
    {4.26, 0.9934865},
    {4.265, 0.9935235},
    {4.27, 0.993558},
    {4.275, 0.99359275},
    {4.28, 0.99362975},
    {4.285, 0.99365975},
    {4.29, 0.99369875},
    {4.295, 0.9937375},
    {4.3, 0.99377325},
    {4.305, 0.99380425},
    {4.31, 0.99383425},
    {4.315, 0.99386925},
    {4.32, 0.99390175},
    {4.325, 0.993937},
    {4.33, 0.993969},
    {4.335, 0.99400075},
    {4.34, 0.99403525},
    {4.345, 0.99406975},
    {4.35, 0.994104},
    {4.355, 0.994134},
    {4.36, 0.99417125},
    {4.365, 0.994205},
    {4.37, 0.99424075},
    {4.375, 0.99427275},
    {4.38, 0.9943015},
    {4.385, 0.99433375},
    {4.39, 0.9943675},
    {4.395, 0.99439725},
    {4.4, 0.99442825},
    {4.405, 0.994455},
    {4.41, 0.99448675},
    {4.415, 0.9945185},
    {4.42, 0.9945475},
    {4.425, 0.99457425},
    {4.43, 0.99460425},
    {4.435, 0.994635},
    {4.44, 0.99466525},
    {4.445, 0.99469725},
    {4.45, 0.99472425},
    {4.455, 0.99475475},
    {4.46, 0.9947835},
    {4.465, 0.99481475},
    {4.47, 0.99484475},
    {4.475, 0.99487575},
    {4.48, 0.99490625},
    {4.485, 0.99493575},
    {4.49, 0.99496225},
    {4.495, 0.9949875},
    {4.5, 0.9950145},
    {4.505, 0.99504675},
    {4.51, 0.99507125},
    {4.515, 0.99509625},
    {4.52, 0.99512775},
    {4.525, 0.99515475},
    {4.53, 0.995182},
    {4.535, 0.995209},
    {4.54, 0.99523525},
    {4.545, 0.99525725},
    {4.55, 0.995279},
    {4.555, 0.995306},
    {4.56, 0.99533325},
    {4.565, 0.9953565},
    {4.57, 0.995382},
    {4.575, 0.9954075},
    {4.58, 0.9954335},
    {4.585, 0.9954555},
    {4.59, 0.99548375},
    {4.595, 0.995511},
    {4.6, 0.99553725},
    {4.605, 0.995562},
    {4.61, 0.99558225},
    {4.615, 0.995606},
    {4.62, 0.9956325},
    {4.625, 0.99565525},
    {4.63, 0.9956795},
    {4.635, 0.9957025},
    {4.64, 0.9957265},
    {4.645, 0.9957535},
    {4.65, 0.9957755},
    {4.655, 0.99579975},
    {4.66, 0.9958245},
    {4.665, 0.9958465},
    {4.67, 0.9958685},
    {4.675, 0.9958935},
    {4.68, 0.99591775},
    {4.685, 0.9959465},
    {4.69, 0.9959685},
    {4.695, 0.9959925},
    {4.7, 0.9960185},
    {4.705, 0.996038},
    {4.71, 0.996057},
    {4.715, 0.9960785},
    {4.72, 0.996101},
    {4.725, 0.99612225},
    {4.73, 0.9961455},
    {4.735, 0.996167},
    {4.74, 0.9961875},
    {4.745, 0.99620475},
    {4.75, 0.996221},
    {4.755, 0.99624025},
    {4.76, 0.99626575},
    {4.765, 0.9962875},
    {4.77, 0.996312},
    {4.775, 0.99633525},
    {4.78, 0.996358},
    {4.785, 0.996379},
    {4.79, 0.99640225},
    {4.795, 0.99642225},
    {4.8, 0.9964495},
    {4.805, 0.996465},
    {4.81, 0.99648625},
    {4.815, 0.99650525},
    {4.82, 0.996524},
    {4.825, 0.99654275},
    {4.83, 0.9965625},
    {4.835, 0.9965805},
    {4.84, 0.99659875},
    {4.845, 0.996616},
    {4.85, 0.99663075},
    {4.855, 0.996649},
    {4.86, 0.99667},
    {4.865, 0.996688},
    {4.87, 0.99670775},
    {4.875, 0.9967225},
    {4.88, 0.9967395},
    {4.885, 0.996759},
    {4.89, 0.99677775},
    {4.895, 0.9967965},
    {4.9, 0.9968135},
    {4.905, 0.99683225},
    {4.91, 0.9968475},
    {4.915, 0.99686825},
    {4.92, 0.996885},
    {4.925, 0.996903},
    {4.93, 0.99692725},
    {4.935, 0.99694575},
    {4.94, 0.99696475},
    {4.945, 0.99697775},
    {4.95, 0.99699425},
    {4.955, 0.99700925},
    {4.96, 0.99702375},
    {4.965, 0.99703725},
    {4.97, 0.9970515},
    {4.975, 0.99707},
    {4.98, 0.997085},
    {4.985, 0.9971015},
    {4.99, 0.997118},
    {4.995, 0.997135},
    {5, 0.9971545},
    {5.005, 0.99717075},
    {5.01, 0.99718575},
    {5.015, 0.997202},
    {5.02, 0.99721575},
    {5.025, 0.997232},
    {5.03, 0.99725125},
    {5.035, 0.9972635},
    {5.04, 0.9972785},
    {5.045, 0.99729425},
    {5.05, 0.997308},
    {5.055, 0.997322},
    {5.06, 0.997334},
    {5.065, 0.99735},
    {5.07, 0.997366},
    {5.075, 0.99737725},
    {5.08, 0.99739275},
    {5.085, 0.99740575},
    {5.09, 0.9974205},
    {5.095, 0.99743375},
    {5.1, 0.997447},
    {5.105, 0.997462},
    {5.11, 0.99747525},
    {5.115, 0.99748825},
    {5.12, 0.997502},
    {5.125, 0.9975145},
    {5.13, 0.99752775},
    {5.135, 0.997541},
    {5.14, 0.9975555},
    {5.145, 0.997568},
    {5.15, 0.997583},
    {5.155, 0.9976015},
    {5.16, 0.9976165},
    {5.165, 0.99762775},
    {5.17, 0.99764275},
    {5.175, 0.99765675},
    {5.18, 0.997669},
    {5.185, 0.997683},
    {5.19, 0.99769375},
    {5.195, 0.99770525},
    {5.2, 0.997721},
    {5.205, 0.997736},
    {5.21, 0.9977505},
    {5.215, 0.997764},
    {5.22, 0.997777},
    {5.225, 0.99778775},
    {5.23, 0.99780125},
    {5.235, 0.9978115},
    {5.24, 0.99782525},
    {5.245, 0.9978385},
    {5.25, 0.99785075},
    {5.255, 0.997862},
    {5.26, 0.99787575},
    {5.265, 0.99789075},
    {5.27, 0.99789775},
    {5.275, 0.99790975},
    {5.28, 0.9979225},
    {5.285, 0.997933},
    {5.29, 0.997944},
    {5.295, 0.997953},
    {5.3, 0.9979645},
    {5.305, 0.9979755},
    {5.31, 0.99798575},
    {5.315, 0.997995},
    {5.32, 0.99800825},
    {5.325, 0.9980205},
    {5.33, 0.99803075},
    {5.335, 0.99803975},
    {5.34, 0.99805125},
    {5.345, 0.99806475},
    {5.35, 0.998073},
    {5.355, 0.99808025},
    {5.36, 0.9980925},
    {5.365, 0.99810375},
    {5.37, 0.998111},
    {5.375, 0.9981195},
    {5.38, 0.99813325},
    {5.385, 0.99814475},
    {5.39, 0.99815475},
    {5.395, 0.99816725},
    {5.4, 0.998179},
    {5.405, 0.99818775},
    {5.41, 0.99819925},
    {5.415, 0.99820925},
    {5.42, 0.99822025},
    {5.425, 0.99823},
    {5.43, 0.99824},
    {5.435, 0.99824925},
    {5.44, 0.99825825},
    {5.445, 0.99826625},
    {5.45, 0.9982755},
    {5.455, 0.998286},
    {5.46, 0.998293},
    {5.465, 0.99830275},
    {5.47, 0.9983155},
    {5.475, 0.99832325},
    {5.48, 0.99833225},
    {5.485, 0.99834},
    {5.49, 0.99834775},
    {5.495, 0.9983535},
    {5.5, 0.99836275},
    {5.505, 0.998371},
    {5.51, 0.99837925},
    {5.515, 0.998387},
    {5.52, 0.998397},
    {5.525, 0.99840625},
    {5.53, 0.9984155},
    {5.535, 0.99842325},
    {5.54, 0.99843075},
    {5.545, 0.9984405},
    {5.55, 0.9984485},
    {5.555, 0.99845525},
    {5.56, 0.998465},
    {5.565, 0.9984715},
    {5.57, 0.9984795},
    {5.575, 0.99848675},
    {5.58, 0.99849875},
    {5.585, 0.99850775},
    {5.59, 0.9985155},
    {5.595, 0.99852475},
    {5.6, 0.99853225},
    {5.605, 0.99854025},
    {5.61, 0.9985485},
    {5.615, 0.998555},
    {5.62, 0.99856225},
    {5.625, 0.998571},
    {5.63, 0.99858225},
    {5.635, 0.9985885},
    {5.64, 0.9985975},
    {5.645, 0.9986045},
    {5.65, 0.99861275},
    {5.655, 0.9986195},
    {5.66, 0.9986265},
    {5.665, 0.998632},
    {5.67, 0.9986395},
    {5.675, 0.99864475},
    {5.68, 0.998651},
    {5.685, 0.99866025},
    {5.69, 0.998668},
    {5.695, 0.998674},
    {5.7, 0.99868125},
    {5.705, 0.99868675},
    {5.71, 0.9986945},
    {5.715, 0.998703},
    {5.72, 0.99871075},
    {5.725, 0.998718},
    {5.73, 0.9987255},
    {5.735, 0.998733},
    {5.74, 0.9987415},
    {5.745, 0.99874625},
    {5.75, 0.998752},
    {5.755, 0.9987595},
    {5.76, 0.99876625},
    {5.765, 0.99877325},
    {5.77, 0.99877975},
    {5.775, 0.998786},
    {5.78, 0.9987905},
    {5.785, 0.9987975},
    {5.79, 0.99880475},
    {5.795, 0.99880975},
    {5.8, 0.998816},
    {5.805, 0.9988205},
    {5.81, 0.998828},
    {5.815, 0.99883575},
    {5.82, 0.99884175},
    {5.825, 0.99884525},
    {5.83, 0.998851},
    {5.835, 0.99885625},
    {5.84, 0.9988605},
    {5.845, 0.998867},
    {5.85, 0.998873},
    {5.855, 0.99888075},
    {5.86, 0.9988885},
    {5.865, 0.99889575},
    {5.87, 0.99890125},
    {5.875, 0.9989075},
    {5.88, 0.998914},
    {5.885, 0.998919},
    {5.89, 0.99892425},
    {5.895, 0.9989315},
    {5.9, 0.9989365},
    {5.905, 0.99894225},
    {5.91, 0.99894525},
    {5.915, 0.998952},
    {5.92, 0.99895725},
    {5.925, 0.9989635},
    {5.93, 0.99896925},
    {5.935, 0.99897725},
    {5.94, 0.99898025},
    {5.945, 0.9989885},
    {5.95, 0.99899275},
    {5.955, 0.998998},
    {5.96, 0.9990045},
    {5.965, 0.999011},
    {5.97, 0.99901675},
    {5.975, 0.99902125},
    {5.98, 0.99902725},
    {5.985, 0.999032},
    {5.99, 0.999037},
    {5.995, 0.999042},
    {6, 0.99904725},
    {6.005, 0.99905425},
    {6.01, 0.9990595},
    {6.015, 0.99906325},
    {6.02, 0.9990695},
    {6.025, 0.999076},
    {6.03, 0.9990795},
    {6.035, 0.99908375},
    {6.04, 0.999088},
    {6.045, 0.99909325},
    {6.05, 0.99909675},
    {6.055, 0.999101},
    {6.06, 0.9991065},
    {6.065, 0.9991105},
    {6.07, 0.9991155},
    {6.075, 0.9991215},
    {6.08, 0.99912575},
    {6.085, 0.99913025},
    {6.09, 0.99913625},
    {6.095, 0.999141},
    {6.1, 0.99914375},
    {6.105, 0.99914975},
    {6.11, 0.99915475},
    {6.115, 0.99915975},
    {6.12, 0.999164},
    {6.125, 0.99916775},
    {6.13, 0.99917325},
    {6.135, 0.99917625},
    {6.14, 0.9991795},
    {6.145, 0.99918375},
    {6.15, 0.99918975},
    {6.155, 0.9991945},
    {6.16, 0.9991985},
    {6.165, 0.99920425},
    {6.17, 0.999208},
    {6.175, 0.99921275},
    {6.18, 0.99921675},
    {6.185, 0.9992205},
    {6.19, 0.9992245},
    {6.195, 0.9992285},
    {6.2, 0.999233},
    {6.205, 0.999238},
    {6.21, 0.99924175},
    {6.215, 0.99924525},
    {6.22, 0.99924925},
    {6.225, 0.99925325},
    {6.23, 0.999259},
    {6.235, 0.999263},
    {6.24, 0.999266},
    {6.245, 0.99927025},
    {6.25, 0.999273},
    {6.255, 0.99927675},
    {6.26, 0.99928},
    {6.265, 0.9992835},
    {6.27, 0.999288},
    {6.275, 0.999293},
    {6.28, 0.99929625},
    {6.285, 0.9993},
    {6.29, 0.99930375},
    {6.295, 0.9993085},
    {6.3, 0.9993135},
    {6.305, 0.9993165},
    {6.31, 0.99931875},
    {6.315, 0.99932325},
    {6.32, 0.9993255},
    {6.325, 0.9993275},
    {6.33, 0.99933325},
    {6.335, 0.9993355},
    {6.34, 0.999338},
    {6.345, 0.99934225},
    {6.35, 0.99934625},
    {6.355, 0.99934975},
    {6.36, 0.99935375},
    {6.365, 0.99935725},
    {6.37, 0.9993625},
    {6.375, 0.99936575},
    {6.38, 0.99936725},
    {6.385, 0.9993695},
    {6.39, 0.99937325},
    {6.395, 0.99937675},
    {6.4, 0.99938025},
    {6.405, 0.9993825},
    {6.41, 0.99938625},
    {6.415, 0.99938925},
    {6.42, 0.999391},
    {6.425, 0.9993945},
    {6.43, 0.9993975},
    {6.435, 0.99940125},
    {6.44, 0.99940475},
    {6.445, 0.99940675},
    {6.45, 0.9994095},
    {6.455, 0.99941325},
    {6.46, 0.9994175},
    {6.465, 0.99942025},
    {6.47, 0.99942275},
    {6.475, 0.999425},
    {6.48, 0.99942875},
    {6.485, 0.99943125},
    {6.49, 0.999434},
    {6.495, 0.9994375},
    {6.5, 0.9994415},
    {6.505, 0.99944375},
    {6.51, 0.99944725},
    {6.515, 0.9994495},
    {6.52, 0.99945275},
    {6.525, 0.99945575},
    {6.53, 0.99945775},
    {6.535, 0.99946},
    {6.54, 0.99946175},
    {6.545, 0.99946425},
    {6.55, 0.99946825},
    {6.555, 0.99946975},
    {6.56, 0.9994725},
    {6.565, 0.999475},
    {6.57, 0.999478},
    {6.575, 0.99948025},
    {6.58, 0.99948225},
    {6.585, 0.99948525},
    {6.59, 0.9994875},
    {6.595, 0.9994905},
    {6.6, 0.9994925},
    {6.605, 0.99949475},
    {6.61, 0.9994985},
    {6.615, 0.99950025},
    {6.62, 0.99950425},
    {6.625, 0.99950625},
    {6.63, 0.9995095},
    {6.635, 0.99951175},
    {6.64, 0.99951375},
    {6.645, 0.99951625},
    {6.65, 0.99951875},
    {6.655, 0.99952225},
    {6.66, 0.99952375},
    {6.665, 0.9995265},
    {6.67, 0.99952725},
    {6.675, 0.999531},
    {6.68, 0.99953375},
    {6.685, 0.99953725},
    {6.69, 0.99954},
    {6.695, 0.9995425},
    {6.7, 0.99954525},
    {6.705, 0.999547},
    {6.71, 0.99954925},
    {6.715, 0.999551},
    {6.72, 0.99955325},
    {6.725, 0.99955475},
    {6.73, 0.99955675},
    {6.735, 0.99956},
    {6.74, 0.99956225},
    {6.745, 0.99956475},
    {6.75, 0.99956625},
    {6.755, 0.9995685},
    {6.76, 0.99957025},
    {6.765, 0.9995715},
    {6.77, 0.9995735},
    {6.775, 0.99957625},
    {6.78, 0.9995775},
    {6.785, 0.99958025},
    {6.79, 0.999582},
    {6.795, 0.99958425},
    {6.8, 0.999585},
    {6.805, 0.99958725},
    {6.81, 0.99959},
    {6.815, 0.99959125},
    {6.82, 0.9995935},
    {6.825, 0.99959475},
    {6.83, 0.99959625},
    {6.835, 0.99959925},
    {6.84, 0.9996005},
    {6.845, 0.99960275},
    {6.85, 0.9996045},
    {6.855, 0.9996075},
    {6.86, 0.99960925},
    {6.865, 0.9996115},
    {6.87, 0.9996135},
    {6.875, 0.999615},
    {6.88, 0.99961625},
    {6.885, 0.99961825},
    {6.89, 0.999621},
    {6.895, 0.999623},
    {6.9, 0.999625},
    {6.905, 0.99962675},
    {6.91, 0.99962875},
    {6.915, 0.99963075},
    {6.92, 0.999634},
    {6.925, 0.99963525},
    {6.93, 0.99963775},
    {6.935, 0.9996395},
    {6.94, 0.99964175},
    {6.945, 0.99964375},
    {6.95, 0.999646},
    {6.955, 0.999648},
    {6.96, 0.9996505},
    {6.965, 0.999652},
    {6.97, 0.99965425},
    {6.975, 0.9996555},
    {6.98, 0.9996575},
    {6.985, 0.999659},
    {6.99, 0.999663},
    {6.995, 0.999664},
    {7, 0.99966525},
    {7.005, 0.999667},
    {7.01, 0.99966775},
    {7.015, 0.99967},
    {7.02, 0.99967125},
    {7.025, 0.9996725},
    {7.03, 0.999674},
    {7.035, 0.999676},
    {7.04, 0.9996785},
    {7.045, 0.99967925},
    {7.05, 0.999681},
    {7.055, 0.9996835},
    {7.06, 0.999686},
    {7.065, 0.99968675},
    {7.07, 0.99968825},
    {7.075, 0.99969},
    {7.08, 0.9996915},
    {7.085, 0.9996925},
    {7.09, 0.99969375},
    {7.095, 0.9996955},
    {7.1, 0.999697},
    {7.105, 0.99969875},
    {7.11, 0.99970025},
    {7.115, 0.99970225},
    {7.12, 0.99970475},
    {7.125, 0.9997055},
    {7.13, 0.99970675},
    {7.135, 0.999708},
    {7.14, 0.99970925},
    {7.145, 0.99971075},
    {7.15, 0.99971125},
    {7.155, 0.9997125},
    {7.16, 0.999714},
    {7.165, 0.999715},
    {7.17, 0.99971675},
    {7.175, 0.99971725},
    {7.18, 0.9997175},
    {7.185, 0.9997185},
    {7.19, 0.9997205},
    {7.195, 0.9997215},
    {7.2, 0.999723},
    {7.205, 0.999724},
    {7.21, 0.999725},
    {7.215, 0.999726},
    {7.22, 0.99972725},
    {7.225, 0.99972825},
    {7.23, 0.99973},
    {7.235, 0.99973175},
    {7.24, 0.999734},
    {7.245, 0.99973575},
    {7.25, 0.99973625},
    {7.255, 0.9997375},
    {7.26, 0.99973875},
    {7.265, 0.99974125},
    {7.27, 0.99974225},
    {7.275, 0.99974275},
    {7.28, 0.99974475},
    {7.285, 0.99974575},
    {7.29, 0.99974725},
    {7.295, 0.99974825},
    {7.3, 0.99975},
    {7.305, 0.99975175},
    {7.31, 0.99975225},
    {7.315, 0.99975325},
    {7.32, 0.99975525},
    {7.325, 0.99975625},
    {7.33, 0.99975825},
    {7.335, 0.99975925},
    {7.34, 0.9997605},
    {7.345, 0.99976175},
    {7.35, 0.99976375},
    {7.355, 0.99976475},
    {7.36, 0.999766},
    {7.365, 0.999766},
    {7.37, 0.999767},
    {7.375, 0.99976775},
    {7.38, 0.9997685},
    {7.385, 0.9997695},
    {7.39, 0.99977075},
    {7.395, 0.9997725},
    {7.4, 0.99977275},
    {7.405, 0.9997735},
    {7.41, 0.999775},
    {7.415, 0.99977575},
    {7.42, 0.999777},
    {7.425, 0.9997785},
    {7.43, 0.99978025},
    {7.435, 0.99978125},
    {7.44, 0.999782},
    {7.445, 0.999783},
    {7.45, 0.99978425},
    {7.455, 0.99978525},
    {7.46, 0.999787},
    {7.465, 0.99978825},
    {7.47, 0.99978975},
    {7.475, 0.99979175},
    {7.48, 0.999793},
    {7.485, 0.99979475},
    {7.49, 0.9997955},
    {7.495, 0.9997965},
    {7.5, 0.999797},
    {7.505, 0.99979875},
    {7.51, 0.99980025},
    {7.515, 0.99980125},
    {7.52, 0.999802},
    {7.525, 0.999803},
    {7.53, 0.99980425},
    {7.535, 0.999805},
    {7.54, 0.9998055},
    {7.545, 0.99980725},
    {7.55, 0.99980875},
    {7.555, 0.99980975},
    {7.56, 0.99981075},
    {7.565, 0.99981175},
    {7.57, 0.9998135},
    {7.575, 0.99981375},
    {7.58, 0.99981525},
    {7.585, 0.99981625},
    {7.59, 0.99981825},
    {7.595, 0.9998205},
    {7.6, 0.9998215},
    {7.605, 0.9998225},
    {7.61, 0.99982325},
    {7.615, 0.9998245},
    {7.62, 0.9998255},
    {7.625, 0.99982725},
    {7.63, 0.99982825},
    {7.635, 0.99982925},
    {7.64, 0.99983025},
    {7.645, 0.99983075},
    {7.65, 0.99983175},
    {7.655, 0.9998325},
    {7.66, 0.999833},
    {7.665, 0.999834},
    {7.67, 0.99983425},
    {7.675, 0.9998355},
    {7.68, 0.999836},
    {7.685, 0.99983725},
    {7.69, 0.99983825},
    {7.695, 0.99983875},
    {7.7, 0.99983975},
    {7.705, 0.999841},
    {7.71, 0.999842},
    {7.715, 0.99984225},
    {7.72, 0.9998435},
    {7.725, 0.999844},
    {7.73, 0.9998445},
    {7.735, 0.999845},
    {7.74, 0.9998455},
    {7.745, 0.99984625},
    {7.75, 0.99984675},
    {7.755, 0.99984725},
    {7.76, 0.999848},
    {7.765, 0.99984925},
    {7.77, 0.9998505},
    {7.775, 0.99985075},
    {7.78, 0.9998515},
    {7.785, 0.9998525},
    {7.79, 0.99985325},
    {7.795, 0.99985375},
    {7.8, 0.9998545},
    {7.805, 0.999855},
    {7.81, 0.99985575},
    {7.815, 0.99985625},
    {7.82, 0.99985725},
    {7.825, 0.99985775},
    {7.83, 0.99985825},
    {7.835, 0.9998585},
    {7.84, 0.99985875},
    {7.845, 0.99985925},
    {7.85, 0.99986025},
    {7.855, 0.9998605},
    {7.86, 0.9998605},
    {7.865, 0.99986175},
    {7.87, 0.9998625},
    {7.875, 0.99986375},
    {7.88, 0.9998655},
    {7.885, 0.9998665},
    {7.89, 0.99986725},
    {7.895, 0.99986925},
    {7.9, 0.9998695},
    {7.905, 0.9998705},
    {7.91, 0.99987125},
    {7.915, 0.99987175},
    {7.92, 0.99987175},
    {7.925, 0.9998725},
    {7.93, 0.99987325},
    {7.935, 0.99987425},
    {7.94, 0.9998745},
    {7.945, 0.9998755},
    {7.95, 0.99987575},
    {7.955, 0.99987625},
    {7.96, 0.999877},
    {7.965, 0.9998775},
    {7.97, 0.99987825},
    {7.975, 0.99987825},
    {7.98, 0.999879},
    {7.985, 0.9998795},
    {7.99, 0.9998805},
    {7.995, 0.99988075},
    {8, 0.999881},
    {8.005, 0.99988175},
    {8.01, 0.999882},
    {8.015, 0.9998835},
    {8.02, 0.9998845},
    {8.025, 0.999885},
    {8.03, 0.99988575},
    {8.035, 0.99988625},
    {8.04, 0.9998865},
    {8.045, 0.999887},
    {8.05, 0.99988725},
    {8.055, 0.99988725},
    {8.06, 0.99988775},
    {8.065, 0.999889},
    {8.07, 0.9998895},
    {8.075, 0.99989025},
    {8.08, 0.99989075},
    {8.085, 0.999891},
    {8.09, 0.9998915},
    {8.095, 0.99989175},
    {8.1, 0.999892},
    {8.105, 0.99989225},
    {8.11, 0.9998925},
    {8.115, 0.99989325},
    {8.12, 0.99989325},
    {8.125, 0.99989375},
    {8.13, 0.99989425},
    {8.135, 0.999895},
    {8.14, 0.999896},
    {8.145, 0.9998965},
    {8.15, 0.999897},
    {8.155, 0.999897},
    {8.16, 0.99989775},
    {8.165, 0.9998995},
    {8.17, 0.9999},
    {8.175, 0.99990025},
    {8.18, 0.99990075},
    {8.185, 0.99990125},
    {8.19, 0.99990175},
    {8.195, 0.9999025},
    {8.2, 0.999903},
    {8.205, 0.999904},
    {8.21, 0.99990475},
    {8.215, 0.99990525},
    {8.22, 0.9999055},
    {8.225, 0.99990575},
    {8.23, 0.99990625},
    {8.235, 0.99990675},
    {8.24, 0.99990725},
    {8.245, 0.999908},
    {8.25, 0.99990825},
    {8.255, 0.9999085},
    {8.26, 0.99990925},
    {8.265, 0.99990975},
    {8.27, 0.99991025},
    {8.275, 0.9999105},
    {8.28, 0.999911},
    {8.285, 0.99991225},
    {8.29, 0.9999125},
    {8.295, 0.99991325},
    {8.3, 0.999914},
    {8.305, 0.99991425},
    {8.31, 0.99991475},
    {8.315, 0.9999155},
    {8.32, 0.999916},
    {8.325, 0.99991625},
    {8.33, 0.9999165},
    {8.335, 0.99991675},
    {8.34, 0.99991725},
    {8.345, 0.9999175},
    {8.35, 0.99991825},
    {8.355, 0.99991875},
    {8.36, 0.999919},
    {8.365, 0.99991975},
    {8.37, 0.99992025},
    {8.375, 0.9999205},
    {8.38, 0.999921},
    {8.385, 0.99992125},
    {8.39, 0.9999215},
    {8.395, 0.99992175},
    {8.4, 0.9999225},
    {8.405, 0.99992275},
    {8.41, 0.99992325},
    {8.415, 0.99992325},
    {8.42, 0.99992375},
    {8.425, 0.999924},
    {8.43, 0.99992425},
    {8.435, 0.99992525},
    {8.44, 0.99992525},
    {8.445, 0.99992525},
    {8.45, 0.99992575},
    {8.455, 0.99992625},
    {8.46, 0.9999265},
    {8.465, 0.99992675},
    {8.47, 0.99992675},
    {8.475, 0.99992675},
    {8.48, 0.999927},
    {8.485, 0.999927},
    {8.49, 0.99992775},
    {8.495, 0.99992825},
    {8.5, 0.99992875},
    {8.505, 0.99992975},
    {8.51, 0.99993},
    {8.515, 0.99993},
    {8.52, 0.99993},
    {8.525, 0.99993},
    {8.53, 0.999931},
    {8.535, 0.999931},
    {8.54, 0.9999315},
    {8.545, 0.999932},
    {8.55, 0.999932},
    {8.555, 0.9999325},
    {8.56, 0.99993275},
    {8.565, 0.99993275},
    {8.57, 0.99993325},
    {8.575, 0.9999335},
    {8.58, 0.9999335},
    {8.585, 0.9999335},
    {8.59, 0.9999335},
    {8.595, 0.9999335},
    {8.6, 0.999934},
    {8.605, 0.99993425},
    {8.61, 0.999935},
    {8.615, 0.99993525},
    {8.62, 0.99993625},
    {8.625, 0.999937},
    {8.63, 0.99993725},
    {8.635, 0.99993725},
    {8.64, 0.99993775},
    {8.645, 0.99993775},
    {8.65, 0.9999385},
    {8.655, 0.999939},
    {8.66, 0.999939},
    {8.665, 0.9999395},
    {8.67, 0.99994},
    {8.675, 0.99994025},
    {8.68, 0.9999405},
    {8.685, 0.9999405},
    {8.69, 0.999941},
    {8.695, 0.9999415},
    {8.7, 0.9999415},
    {8.705, 0.99994175},
    {8.71, 0.99994175},
    {8.715, 0.999942},
    {8.72, 0.9999425},
    {8.725, 0.99994275},
    {8.73, 0.999943},
    {8.735, 0.99994325},
    {8.74, 0.99994325},
    {8.745, 0.99994325},
    {8.75, 0.9999435},
    {8.755, 0.99994375},
    {8.76, 0.99994425},
    {8.765, 0.9999445},
    {8.77, 0.9999445},
    {8.775, 0.9999455},
    {8.78, 0.9999455},
    {8.785, 0.99994575},
    {8.79, 0.999946},
    {8.795, 0.99994625},
    {8.8, 0.9999465},
    {8.805, 0.99994675},
    {8.81, 0.9999475},
    {8.815, 0.9999475},
    {8.82, 0.9999475},
    {8.825, 0.99994775},
    {8.83, 0.999948},
    {8.835, 0.999948},
    {8.84, 0.999948},
    {8.845, 0.999948},
    {8.85, 0.999948},
    {8.855, 0.9999485},
    {8.86, 0.99994875},
    {8.865, 0.99994925},
    {8.87, 0.99994925},
    {8.875, 0.99994975},
    {8.88, 0.99995025},
    {8.885, 0.99995075},
    {8.89, 0.999951},
    {8.895, 0.99995125},
    {8.9, 0.9999515},
    {8.905, 0.999953},
    {8.91, 0.999953},
    {8.915, 0.999953},
    {8.92, 0.9999535},
    {8.925, 0.9999535},
    {8.93, 0.9999535},
    {8.935, 0.9999535},
    {8.94, 0.999954},
    {8.945, 0.999954},
    {8.95, 0.999954},
    {8.955, 0.999954},
    {8.96, 0.99995425},
    {8.965, 0.999955},
    {8.97, 0.9999555},
    {8.975, 0.999956},
    {8.98, 0.999956},
    {8.985, 0.99995625},
    {8.99, 0.99995625},
    {8.995, 0.9999565},
    {9, 0.999957},
    {9.005, 0.999957},
    {9.01, 0.99995725},
    {9.015, 0.99995775},
    {9.02, 0.9999585},
    {9.025, 0.999959},
    {9.03, 0.999959},
    {9.035, 0.99995925},
    {9.04, 0.99995975},
    {9.045, 0.99996},
    {9.05, 0.99996025},
    {9.055, 0.99996025},
    {9.06, 0.99996175},
    {9.065, 0.99996225},
    {9.07, 0.9999625},
    {9.075, 0.9999625},
    {9.08, 0.9999625},
    {9.085, 0.9999625},
    {9.09, 0.9999625},
    {9.095, 0.9999625},
    {9.1, 0.99996275},
    {9.105, 0.99996275},
    {9.11, 0.999963},
    {9.115, 0.99996325},
    {9.12, 0.99996325},
    {9.125, 0.9999635},
    {9.13, 0.99996375},
    {9.135, 0.99996375},
    {9.14, 0.99996375},
    {9.145, 0.999964},
    {9.15, 0.99996425},
    {9.155, 0.99996425},
    {9.16, 0.99996425},
    {9.165, 0.99996425},
    {9.17, 0.9999645},
    {9.175, 0.99996475},
    {9.18, 0.99996475},
    {9.185, 0.999965},
    {9.19, 0.999965},
    {9.195, 0.99996525},
    {9.2, 0.99996525},
    {9.205, 0.99996525},
    {9.21, 0.9999655},
    {9.215, 0.999966},
    {9.22, 0.9999665},
    {9.225, 0.9999665},
    {9.23, 0.99996675},
    {9.235, 0.999967},
    {9.24, 0.99996725},
    {9.245, 0.99996725},
    {9.25, 0.99996775},
    {9.255, 0.99996775},
    {9.26, 0.999968},
    {9.265, 0.999968},
    {9.27, 0.99996825},
    {9.275, 0.99996825},
    {9.28, 0.99996825},
    {9.285, 0.99996825},
    {9.29, 0.9999685},
    {9.295, 0.99996875},
    {9.3, 0.99996875},
    {9.305, 0.99996875},
    {9.31, 0.99996875},
    {9.315, 0.99996875},
    {9.32, 0.99996875},
    {9.325, 0.99996875},
    {9.33, 0.99996875},
    {9.335, 0.999969},
    {9.34, 0.9999695},
    {9.345, 0.9999695},
    {9.35, 0.9999695},
    {9.355, 0.99996975},
    {9.36, 0.99996975},
    {9.365, 0.99997},
    {9.37, 0.99997},
    {9.375, 0.99997},
    {9.38, 0.99997},
    {9.385, 0.99997},
    {9.39, 0.99997},
    {9.395, 0.9999705},
    {9.4, 0.9999705},
    {9.405, 0.9999705},
    {9.41, 0.9999705},
    {9.415, 0.99997125},
    {9.42, 0.9999715},
    {9.425, 0.9999715},
    {9.43, 0.99997175},
    {9.435, 0.999972},
    {9.44, 0.999972},
    {9.445, 0.999972},
    {9.45, 0.99997225},
    {9.455, 0.99997225},
    {9.46, 0.999973},
    {9.465, 0.99997325},
    {9.47, 0.99997325},
    {9.475, 0.99997325},
    {9.48, 0.99997325},
    {9.485, 0.9999735},
    {9.49, 0.99997375},
    {9.495, 0.99997375},
    {9.5, 0.99997375},
    {9.505, 0.99997375},
    {9.51, 0.99997425},
    {9.515, 0.9999745},
    {9.52, 0.9999745},
    {9.525, 0.9999745},
    {9.53, 0.9999745},
    {9.535, 0.9999745},
    {9.54, 0.9999745},
    {9.545, 0.9999745},
    {9.55, 0.9999745},
    {9.555, 0.999975},
    {9.56, 0.999975},
    {9.565, 0.999975},
    {9.57, 0.999975},
    {9.575, 0.99997525},
    {9.58, 0.99997525},
    {9.585, 0.99997525},
    {9.59, 0.9999755},
    {9.595, 0.9999755},
    {9.6, 0.99997575},
    {9.605, 0.99997575},
    {9.61, 0.999976},
    {9.615, 0.999976},
    {9.62, 0.99997625},
    {9.625, 0.99997625},
    {9.63, 0.99997625},
    {9.635, 0.99997625},
    {9.64, 0.99997625},
    {9.645, 0.99997625},
    {9.65, 0.99997625},
    {9.655, 0.99997625},
    {9.66, 0.99997625},
    {9.665, 0.9999765},
    {9.67, 0.99997675},
    {9.675, 0.99997675},
    {9.68, 0.99997675},
    {9.685, 0.999977},
    {9.69, 0.999977},
    {9.695, 0.99997725},
    {9.7, 0.99997725},
    {9.705, 0.9999775},
    {9.71, 0.9999775},
    {9.715, 0.99997775},
    {9.72, 0.99997775},
    {9.725, 0.99997775},
    {9.73, 0.99997775},
    {9.735, 0.99997825},
    {9.74, 0.9999785},
    {9.745, 0.99997875},
    {9.75, 0.99997875},
    {9.755, 0.99997875},
    {9.76, 0.99997875},
    {9.765, 0.999979},
    {9.77, 0.99997975},
    {9.775, 0.99998},
    {9.78, 0.99998025},
    {9.785, 0.99998025},
    {9.79, 0.9999805},
    {9.795, 0.9999805},
    {9.8, 0.99998075},
    {9.805, 0.99998075},
    {9.81, 0.99998075},
    {9.815, 0.99998075},
    {9.82, 0.999981},
    {9.825, 0.999981},
    {9.83, 0.999981},
    {9.835, 0.99998125},
    {9.84, 0.99998125},
    {9.845, 0.99998125},
    {9.85, 0.99998125},
    {9.855, 0.9999815},
    {9.86, 0.99998175},
    {9.865, 0.99998175},
    {9.87, 0.99998225},
    {9.875, 0.99998225},
    {9.88, 0.99998225},
    {9.885, 0.99998225},
    {9.89, 0.9999825},
    {9.895, 0.9999825},
    {9.9, 0.99998275},
    {9.905, 0.99998275},
    {9.91, 0.99998275},
    {9.915, 0.99998275},
    {9.92, 0.999983},
    {9.925, 0.999983},
    {9.93, 0.999983},
    {9.935, 0.999983},
    {9.94, 0.999983},
    {9.945, 0.999983},
    {9.95, 0.999983},
    {9.955, 0.99998325},
    {9.96, 0.9999835},
    {9.965, 0.9999835},
    {9.97, 0.99998375},
    {9.975, 0.99998375},
    {9.98, 0.999984},
    {9.985, 0.999984},
    {9.99, 0.99998425},
    {9.995, 0.99998425},
    {10, 0.9999845},
    {10.005, 0.99998475},
    {10.01, 0.999985},
    {10.015, 0.999985},
    {10.02, 0.99998525},
    {10.025, 0.99998525},
    {10.03, 0.99998525},
    {10.035, 0.9999855},
    {10.04, 0.99998575},
    {10.045, 0.999986},
    {10.05, 0.999986},
    {10.055, 0.99998625},
    {10.06, 0.99998625},
    {10.065, 0.99998625},
    {10.07, 0.99998625},
    {10.075, 0.99998625},
    {10.08, 0.9999865},
    {10.085, 0.9999865},
    {10.09, 0.9999865},
    {10.095, 0.9999865},
    {10.1, 0.9999865},
    {10.105, 0.99998675},
    {10.11, 0.99998675},
    {10.115, 0.99998675},
    {10.12, 0.99998675},
    {10.125, 0.999987},
    {10.13, 0.999987},
    {10.135, 0.99998725},
    {10.14, 0.99998725},
    {10.145, 0.9999875},
    {10.15, 0.9999875},
    {10.155, 0.99998775},
    {10.16, 0.99998775},
    {10.165, 0.99998775},
    {10.17, 0.99998775},
    {10.175, 0.99998775},
    {10.18, 0.99998775},
    {10.185, 0.99998775},
    {10.19, 0.999988},
    {10.195, 0.999988},
    {10.2, 0.999988},
    {10.205, 0.999988},
    {10.21, 0.999988},
    {10.215, 0.999988},
    {10.22, 0.999988},
    {10.225, 0.999988},
    {10.23, 0.999988},
    {10.235, 0.999988},
    {10.24, 0.999988},
    {10.245, 0.9999885},
    {10.25, 0.9999885},
    {10.255, 0.9999885},
    {10.26, 0.9999885},
    {10.265, 0.99998875},
    {10.27, 0.99998875},
    {10.275, 0.99998875},
    {10.28, 0.99998875},
    {10.285, 0.99998875},
    {10.29, 0.999989},
    {10.295, 0.999989},
    {10.3, 0.99998925},
    {10.305, 0.9999895},
    {10.31, 0.9999895},
    {10.315, 0.9999895},
    {10.32, 0.9999895},
    {10.325, 0.9999895},
    {10.33, 0.99998975},
    {10.335, 0.99998975},
    {10.34, 0.99998975},
    {10.345, 0.99998975},
    {10.35, 0.99999},
    {10.355, 0.99999025},
    {10.36, 0.99999025},
    {10.365, 0.99999025},
    {10.37, 0.99999025},
    {10.375, 0.99999025},
    {10.38, 0.99999075},
    {10.385, 0.99999075},
    {10.39, 0.99999075},
    {10.395, 0.99999075},
    {10.4, 0.99999075},
    {10.405, 0.99999075},
    {10.41, 0.99999075},
    {10.415, 0.99999075},
    {10.42, 0.99999075},
    {10.425, 0.99999075},
    {10.43, 0.999991},
    {10.435, 0.999991},
    {10.44, 0.999991},
    {10.445, 0.999991},
    {10.45, 0.999991},
    {10.455, 0.999991},
    {10.46, 0.999991},
    {10.465, 0.999991},
    {10.47, 0.999991},
    {10.475, 0.999991},
    {10.48, 0.99999125},
    {10.485, 0.99999125},
    {10.49, 0.99999125},
    {10.495, 0.99999125},
    {10.5, 0.99999125},
    {10.505, 0.99999125},
    {10.51, 0.99999125},
    {10.515, 0.99999125},
    {10.52, 0.9999915},
    {10.525, 0.9999915},
    {10.53, 0.9999915},
    {10.535, 0.9999915},
    {10.54, 0.9999915},
    {10.545, 0.99999175},
    {10.55, 0.999992},
    {10.555, 0.99999225},
    {10.56, 0.99999225},
    {10.565, 0.99999225},
    {10.57, 0.99999225},
    {10.575, 0.99999225},
    {10.58, 0.9999925},
    {10.585, 0.9999925},
    {10.59, 0.9999925},
    {10.595, 0.9999925},
    {10.6, 0.9999925},
    {10.605, 0.9999925},
    {10.61, 0.9999925},
    {10.615, 0.9999925},
    {10.62, 0.9999925},
    {10.625, 0.99999275},
    {10.63, 0.99999275},
    {10.635, 0.99999275},
    {10.64, 0.99999275},
    {10.645, 0.99999275},
    {10.65, 0.99999275},
    {10.655, 0.99999275},
    {10.66, 0.99999275},
    {10.665, 0.99999275},
    {10.67, 0.99999275},
    {10.675, 0.99999275},
    {10.68, 0.99999275},
    {10.685, 0.99999275},
    {10.69, 0.99999275},
    {10.695, 0.99999275},
    {10.7, 0.99999275},
    {10.705, 0.999993},
    {10.71, 0.999993},
    {10.715, 0.999993},
    {10.72, 0.999993},
    {10.725, 0.999993},
    {10.73, 0.999993},
    {10.735, 0.999993},
    {10.74, 0.999993},
    {10.745, 0.999993},
    {10.75, 0.999993},
    {10.755, 0.999993},
    {10.76, 0.99999325},
    {10.765, 0.99999325},
    {10.77, 0.99999325},
    {10.775, 0.99999325},
    {10.78, 0.99999325},
    {10.785, 0.99999325},
    {10.79, 0.99999325},
    {10.795, 0.99999325},
    {10.8, 0.99999325},
    {10.805, 0.99999325},
    {10.81, 0.99999325},
    {10.815, 0.99999325},
    {10.82, 0.99999325},
    {10.825, 0.9999935},
    {10.83, 0.9999935},
    {10.835, 0.9999935},
    {10.84, 0.99999375},
    {10.845, 0.99999375},
    {10.85, 0.99999375},
    {10.855, 0.99999375},
    {10.86, 0.99999375},
    {10.865, 0.999994},
    {10.87, 0.999994},
    {10.875, 0.999994},
    {10.88, 0.999994},
    {10.885, 0.999994},
    {10.89, 0.999994},
    {10.895, 0.999994},
    {10.9, 0.999994},
    {10.905, 0.999994},
    {10.91, 0.99999425},
    {10.915, 0.99999425},
    {10.92, 0.99999425},
    {10.925, 0.99999425},
    {10.93, 0.99999425},
    {10.935, 0.99999425},
    {10.94, 0.99999425},
    {10.945, 0.99999425},
    {10.95, 0.99999425},
    {10.955, 0.9999945},
    {10.96, 0.9999945},
    {10.965, 0.9999945},
    {10.97, 0.9999945},
    {10.975, 0.9999945},
    {10.98, 0.9999945},
    {10.985, 0.9999945},
    {10.99, 0.9999945},
    {10.995, 0.9999945},
    {11, 0.9999945},
    {11.005, 0.9999945},
    {11.01, 0.9999945},
    {11.015, 0.9999945},
    {11.02, 0.9999945},
    {11.025, 0.9999945},
    {11.03, 0.9999945},
    {11.035, 0.9999945},
    {11.04, 0.99999525},
    {11.045, 0.99999525},
    {11.05, 0.99999525},
    {11.055, 0.9999955},
    {11.06, 0.9999955},
    {11.065, 0.9999955},
    {11.07, 0.9999955},
    {11.075, 0.9999955},
    {11.08, 0.9999955},
    {11.085, 0.9999955},
    {11.09, 0.9999955},
    {11.095, 0.9999955},
    {11.1, 0.9999955},
    {11.105, 0.9999955},
    {11.11, 0.9999955},
    {11.115, 0.9999955},
    {11.12, 0.9999955},
    {11.125, 0.9999955},
    {11.13, 0.9999955},
    {11.135, 0.9999955},
    {11.14, 0.99999575},
    {11.145, 0.999996},
    {11.15, 0.999996},
    {11.155, 0.999996},
    {11.16, 0.999996},
    {11.165, 0.99999625},
    {11.17, 0.99999625},
    {11.175, 0.99999625},
    {11.18, 0.99999625},
    {11.185, 0.99999625},
    {11.19, 0.99999625},
    {11.195, 0.99999625},
    {11.2, 0.9999965},
    {11.205, 0.9999965},
    {11.21, 0.9999965},
    {11.215, 0.9999965},
    {11.22, 0.9999965},
    {11.225, 0.9999965},
    {11.23, 0.9999965},
    {11.235, 0.9999965},
    {11.24, 0.9999965},
    {11.245, 0.9999965},
    {11.25, 0.9999965},
    {11.255, 0.9999965},
    {11.26, 0.9999965},
    {11.265, 0.9999965},
    {11.27, 0.9999965},
    {11.275, 0.9999965},
    {11.28, 0.9999965},
    {11.285, 0.9999965},
    {11.29, 0.9999965},
    {11.295, 0.9999965},
    {11.3, 0.9999965},
    {11.305, 0.9999965},
    {11.31, 0.9999965},
    {11.315, 0.9999965},
    {11.32, 0.9999965},
    {11.325, 0.9999965},
    {11.33, 0.9999965},
    {11.335, 0.9999965},
    {11.34, 0.9999965},
    {11.345, 0.9999965},
    {11.35, 0.9999965},
    {11.355, 0.9999965},
    {11.36, 0.9999965},
    {11.365, 0.9999965},
    {11.37, 0.9999965},
    {11.375, 0.9999965},
    {11.38, 0.9999965},
    {11.385, 0.9999965},
    {11.39, 0.9999965},
    {11.395, 0.9999965},
    {11.4, 0.9999965},
    {11.405, 0.99999675},
    {11.41, 0.99999675},
    {11.415, 0.99999675},
    {11.42, 0.99999675},
    {11.425, 0.99999675},
    {11.43, 0.99999675},
    {11.435, 0.99999675},
    {11.44, 0.99999675},
    {11.445, 0.99999675},
    {11.45, 0.99999675},
    {11.455, 0.99999675},
    {11.46, 0.999997},
    {11.465, 0.999997},
    {11.47, 0.999997},
    {11.475, 0.999997},
    {11.48, 0.999997},
    {11.485, 0.999997},
    {11.49, 0.999997},
    {11.495, 0.999997},
    {11.5, 0.999997},
    {11.505, 0.999997},
    {11.51, 0.999997},
    {11.515, 0.999997},
    {11.52, 0.999997},
    {11.525, 0.999997},
    {11.53, 0.999997},
    {11.535, 0.999997},
    {11.54, 0.999997},
    {11.545, 0.999997},
    {11.55, 0.999997},
    {11.555, 0.999997},
    {11.56, 0.999997},
    {11.565, 0.999997},
    {11.57, 0.999997},
    {11.575, 0.999997},
    {11.58, 0.999997},
    {11.585, 0.99999725},
    {11.59, 0.99999725},
    {11.595, 0.99999725},
    {11.6, 0.99999725},
    {11.605, 0.99999725},
    {11.61, 0.99999725},
    {11.615, 0.99999725},
    {11.62, 0.99999725},
    {11.625, 0.99999725},
    {11.63, 0.99999725},
    {11.635, 0.99999725},
    {11.64, 0.9999975},
    {11.645, 0.9999975},
    {11.65, 0.9999975},
    {11.655, 0.9999975},
    {11.66, 0.9999975},
    {11.665, 0.9999975},
    {11.67, 0.9999975},
    {11.675, 0.9999975},
    {11.68, 0.9999975},
    {11.685, 0.9999975},
    {11.69, 0.9999975},
    {11.695, 0.9999975},
    {11.7, 0.9999975},
    {11.705, 0.9999975},
    {11.71, 0.9999975},
    {11.715, 0.9999975},
    {11.72, 0.9999975},
    {11.725, 0.9999975},
    {11.73, 0.99999775},
    {11.735, 0.99999775},
    {11.74, 0.99999775},
    {11.745, 0.99999775},
    {11.75, 0.99999775},
    {11.755, 0.99999775},
    {11.76, 0.99999775},
    {11.765, 0.99999775},
    {11.77, 0.99999775},
    {11.775, 0.99999775},
    {11.78, 0.99999775},
    {11.785, 0.99999775},
    {11.79, 0.99999775},
    {11.795, 0.99999775},
    {11.8, 0.99999775},
    {11.805, 0.99999775},
    {11.81, 0.99999775},
    {11.815, 0.99999775},
    {11.82, 0.99999775},
    {11.825, 0.999998},
    {11.83, 0.999998},
    {11.835, 0.999998},
    {11.84, 0.99999825},
    {11.845, 0.99999825},
    {11.85, 0.99999825},
    {11.855, 0.99999825},
    {11.86, 0.99999825},
    {11.865, 0.99999825},
    {11.87, 0.99999825},
    {11.875, 0.99999825},
    {11.88, 0.99999825},
    {11.885, 0.99999825},
    {11.89, 0.99999825},
    {11.895, 0.99999825},
    {11.9, 0.99999825},
    {11.905, 0.99999825},
    {11.91, 0.99999825},
    {11.915, 0.99999825},
    {11.92, 0.99999825},
    {11.925, 0.99999825},
    {11.93, 0.99999825},
    {11.935, 0.99999825},
    {11.94, 0.99999825},
    {11.945, 0.99999825},
    {11.95, 0.99999825},
    {11.955, 0.99999825},
    {11.96, 0.99999825},
    {11.965, 0.99999825},
    {11.97, 0.99999825},
    {11.975, 0.99999825},
    {11.98, 0.99999825},
    {11.985, 0.99999825},
    {11.99, 0.99999825},
    {11.995, 0.99999825},
    {12, 0.99999825},
};

const unsigned kKnotCount = 2401;

}  // namespace sphstat::radial::fa_data
