/* 计数器 */
public class Jishu {
    int jishu;
}
