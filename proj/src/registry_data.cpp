#include "cq/centers.hpp"

namespace cq {

// Default center registry: `n;first-coordinate formula;flags` per line.
// S is twice the triangle area; builtins are geometric procedures.
const char* const kDefaultRegistryText = R"REG(
1;a;
2;1;euler:t=1/3
3;a^2*(b^2+c^2-a^2);euler:t=0
4;(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=1
5;a^2*(b^2+c^2)-(b^2-c^2)^2;euler:t=1/2
6;a^2;
11;(b+c-a)*(b-c)^2;setM
13;1/(sqrt(3)*(b^2+c^2-a^2)+2*S);
14;1/(2*S-sqrt(3)*(b^2+c^2-a^2));
20;2*a^2*(b^2+c^2-a^2)-(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=-1
26;a^2*(a^8-2*a^6*(b^2+c^2)+2*a^2*(b^6+c^6)-b^8+2*b^6*c^2-2*b^4*c^4+2*b^2*c^6-c^8);
51;a^2*(a^2*(b^2+c^2)-(b^2-c^2)^2);
68;(b^2+c^2-a^2)/((b^2+c^2-a^2)^2-4*S^2);
69;b^2+c^2-a^2;
74;a^2/(2*a^4-a^2*(b^2+c^2)-(b^2-c^2)^2);circumcircle,setT
99;(c^2-a^2)*(a^2-b^2);circumcircle,setA
100;a*(a-b)*(c-a);circumcircle,setA
101;a^2*(c-a)*(a-b);circumcircle,setA
110;a^2*(c^2-a^2)*(a^2-b^2);circumcircle,setA
115;(b^2-c^2)^2;setM
116;b^2*(a-b)*(b-c)+c^2*(b-c)*(c-a);setM
122;(b^2-c^2)*(b^2+c^2-a^2)^2*((a^2-b^2)*(a^2+b^2-c^2)^2+(c^2-a^2)*(c^2+a^2-b^2)^2);setM
123;(b^2-c^2)*(b^2*c^2-a^4)*(b^2*(a^2-b^2)*(a^2*b^2-c^4)+c^2*(c^2-a^2)*(c^2*a^2-b^4));setM
124;(b-c)*(b+c-a)*(b^2*(a-b)*(a+b-c)+c^2*(c-a)*(c+a-b));setM
125;(b^2+c^2-a^2)*(b^2-c^2)^2;setM
127;(b^2-c^2)*(b^2+c^2-a^2)*(b^2*(a^2-b^2)*(a^2+b^2-c^2)+c^2*(c^2-a^2)*(c^2+a^2-b^2));setM
130;(b^2-c^2)^2*(b^2+c^2)*a^2;setM
134;(b^2-c^2)^2*(b+c-a)*(b+c+a)*a^2;setM
135;(b-c)^2*(b+c)^2*(b^2+c^2-a^2)^2;setM
136;(b^2-c^2)^2*(b^2+c^2-a^2)*(b^2+c^2);setM
137;(b^2-c^2)^2*(b^2+c^2-2*a^2)^2;setM
139;(b^2-c^2)^2*(b^2+c^2-a^2)^2*(b^2+c^2);setM
140;3*a^2*(b^2+c^2-a^2)+(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=1/4
148;-((c^2-a^2)*(a^2-b^2))+(a^2-b^2)*(b^2-c^2)+(b^2-c^2)*(c^2-a^2);
149;-(a*(a-b)*(c-a))+b*(b-c)*(a-b)+c*(c-a)*(b-c);
150;-(a^2*(c-a)*(a-b))+b^2*(a-b)*(b-c)+c^2*(b-c)*(c-a);
154;a^2*(2*a^2*(b^2+c^2)+(b^2-c^2)^2-3*a^4);
155;a^2*(b^2+c^2-a^2)*(b^6+c^6-a^6+3*a^4*(b^2+c^2)-3*a^2*(b^4+c^4)+2*a^2*b^2*c^2-b^4*c^2-b^2*c^4);
156;a^2*(a^8-3*a^6*(b^2+c^2)+3*a^4*(b^4+c^4)+2*a^4*b^2*c^2-a^2*(b^6+c^6)+b^6*c^2-2*b^4*c^4+b^2*c^6);
157;a^2*(a^6-a^4*(b^2+c^2)+a^2*(b^4+c^4)-b^6+b^4*c^2+b^2*c^4-c^6);
165;a*((b-c)^2+2*a*(b+c)-3*a^2);
214;a/(a+b+c)+a*(a-b)*(c-a)/(a^2*(b+c)+b^2*(c+a)+c^2*(a+b)-a^3-b^3-c^3-3*a*b*c);
244;a*(b-c)^2;setM
245;(b-c)^2*(b+c-a)^2;setM
246;a^2*(b-c)^2;setM
247;(b-c)^2*(b^2+c^2);setM
290;b^2*(b^2*(c^2+a^2)-c^4-a^4)*c^2*(c^2*(a^2+b^2)-a^4-b^4);
317;((b^2+c^2-a^2)^2-4*S^2)/(b^2+c^2-a^2);
338;(b^2-c^2)^2*(b^2*(a^2-b^2)^2+c^2*(c^2-a^2)^2);setM
339;(b^2-c^2)^2*(b^2+c^2-a^2)*(b^2*(a^2+b^2-c^2)*(a^2-b^2)^2+c^2*(c^2+a^2-b^2)*(c^2-a^2)^2);setM
371;a^2*(b^2+c^2-a^2+2*S);
372;a^2*(b^2+c^2-a^2-2*S);
373;a^2*(a^2*(b^2+c^2)-b^4+4*b^2*c^2-c^4);
376;4*a^2*(b^2+c^2-a^2)-(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=-1/3
381;a^2*(b^2+c^2-a^2)+2*(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=2/3
382;2*(c^2+a^2-b^2)*(a^2+b^2-c^2)-a^2*(b^2+c^2-a^2);euler:t=2
399;2*a^2*(c^2-a^2)*(a^2-b^2)/(a^2*(c^2-a^2)*(a^2-b^2)+b^2*(a^2-b^2)*(b^2-c^2)+c^2*(b^2-c^2)*(c^2-a^2))-a^2*(b^2+c^2-a^2)/(2*a^2*b^2+2*b^2*c^2+2*c^2*a^2-a^4-b^4-c^4);
402;builtin:gossard;
476;builtin:tixier;circumcircle,setA
477;builtin:tixier-antipode;circumcircle,setT
485;1/(b^2+c^2-a^2+2*S);
486;1/(b^2+c^2-a^2-2*S);
487;-1/(b^2+c^2-a^2-2*S)+1/(c^2+a^2-b^2-2*S)+1/(a^2+b^2-c^2-2*S);
491;a^2-2*S;
546;a^2*(b^2+c^2-a^2)+3*(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=3/4
547;7*a^2*(b^2+c^2-a^2)+5*(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=5/12
548;5*a^2*(b^2+c^2-a^2)-(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=-1/4
549;5*a^2*(b^2+c^2-a^2)+(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=1/6
550;3*a^2*(b^2+c^2-a^2)-(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=-1/2
577;a^4*(b^2+c^2-a^2)^2;
586;a^2-S;
591;2*a^2-b^2-c^2+S;
615;b^2+c^2-a^2-2*S;
616;-(1/(sqrt(3)*(b^2+c^2-a^2)+2*S))+1/(sqrt(3)*(c^2+a^2-b^2)+2*S)+1/(sqrt(3)*(a^2+b^2-c^2)+2*S);
617;-(1/(2*S-sqrt(3)*(b^2+c^2-a^2)))+1/(2*S-sqrt(3)*(c^2+a^2-b^2))+1/(2*S-sqrt(3)*(a^2+b^2-c^2));
618;1/(sqrt(3)*(c^2+a^2-b^2)+2*S)+1/(sqrt(3)*(a^2+b^2-c^2)+2*S);
619;1/(2*S-sqrt(3)*(c^2+a^2-b^2))+1/(2*S-sqrt(3)*(a^2+b^2-c^2));
620;1/3+(c^2-a^2)*(a^2-b^2)/(3*(a^2*b^2+b^2*c^2+c^2*a^2)-(a^2+b^2+c^2)^2);
631;7*a^2*(b^2+c^2-a^2)+(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=1/8
632;5*a^2*(b^2+c^2-a^2)+3*(c^2+a^2-b^2)*(a^2+b^2-c^2);euler:t=3/8
640;b^2*(c^2+a^2-b^2-2*S)+c^2*(a^2+b^2-c^2-2*S);
642;1/(c^2+a^2-b^2-2*S)+1/(a^2+b^2-c^2-2*S);
671;(2*b^2-c^2-a^2)*(2*c^2-a^2-b^2);
865;a^3*(b-c)^2;setM
866;(b^2-c^2)^2*(b+c-a);setM
867;a*(b^2-c^2)^2;setM
868;(b-c)^2*(b^2+c^2-a^2)^2;setM
903;(2*b-c-a)*(2*c-a-b);
925;a^2/((b^2-c^2)*(b^2*c^2-a^4));circumcircle,setA
)REG";

}  // namespace cq
