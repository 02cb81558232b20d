// 计数
public class Counter {
    int 计数;

    /* 增加 */
    void 增加() {
        计数++;
    }
}
